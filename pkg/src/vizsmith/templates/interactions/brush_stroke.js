// Sweep a horizontal span to emphasize the path while a span is active
__SVG_ROOT__.append("g")
  .attr("class", "brush")
  .call(d3.brushX()
    .extent([[0, 0], [__WIDTH_EXPR__, __HEIGHT_EXPR__]])
    .on("end", function(event) {
      // Thicken and recolor the path whenever a span is swept out
      __SVG_ROOT__.selectAll("__MARK_SELECTOR__")
        .attr("stroke", event.selection === null ? __MARK_COLOR__ : "__HIGHLIGHT_COLOR__")
        .attr("stroke-width", event.selection === null ? 1.5 : 3);
    }));
