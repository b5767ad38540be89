__ANCHOR__
  .on("mouseover", function(event, d) {
    // Emphasize the path under the pointer
    d3.select(this).attr("stroke", "__HIGHLIGHT_COLOR__").attr("stroke-width", 3);
  })
  .on("mouseout", function(event, d) {
    // Restore the path to its original color and weight
    d3.select(this).attr("stroke", __MARK_COLOR__).attr("stroke-width", 1.5);
  });
