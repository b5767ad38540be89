__ANCHOR__
  .call(d3.drag()
    .on("drag", function(event, d) {
      // Slide the whole path vertically with the pointer
      d3.select(this).attr("transform", "translate(0," + event.y + ")");
    }));
