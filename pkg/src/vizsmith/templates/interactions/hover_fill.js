__ANCHOR__
  .on("mouseover", function(event, d) {
    // Emphasize the mark under the pointer
    d3.select(this).attr("fill", "__HIGHLIGHT_COLOR__");
  })
  .on("mouseout", function(event, d) {
    // Restore the mark to its original color
    d3.select(this).attr("fill", __MARK_COLOR__);
  });
