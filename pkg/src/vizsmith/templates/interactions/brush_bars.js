// Sweep a horizontal span to highlight the bars inside it
__SVG_ROOT__.append("g")
  .attr("class", "brush")
  .call(d3.brushX()
    .extent([[0, 0], [__WIDTH_EXPR__, __HEIGHT_EXPR__]])
    .on("end", function(event) {
      // Recolor every bar by whether it starts inside the swept span
      __SVG_ROOT__.selectAll("__MARK_SELECTOR__").attr("fill", function(d) {
        const m = d3.select(this);
        const inside = event.selection !== null && +m.attr("x") >= event.selection[0] && +m.attr("x") <= event.selection[1];
        return inside ? "__HIGHLIGHT_COLOR__" : __MARK_COLOR__;
      });
    }));
