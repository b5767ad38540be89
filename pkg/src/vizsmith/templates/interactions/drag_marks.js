__ANCHOR__
  .call(d3.drag()
    .on("drag", function(event, d) {
      // Move the dragged mark with the pointer
      d3.select(this).attr("__POS_X__", event.x).attr("__POS_Y__", event.y);
    }));
