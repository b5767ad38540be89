// Sweep a rectangular region to highlight the marks inside it
__SVG_ROOT__.append("g")
  .attr("class", "brush")
  .call(d3.brush()
    .extent([[0, 0], [__WIDTH_EXPR__, __HEIGHT_EXPR__]])
    .on("end", function(event) {
      // Recolor every mark by whether it sits inside the swept region
      __SVG_ROOT__.selectAll("__MARK_SELECTOR__").attr("fill", function(d) {
        const m = d3.select(this);
        const inside = event.selection !== null && +m.attr("__POS_X__") >= event.selection[0][0] && +m.attr("__POS_X__") <= event.selection[1][0] && +m.attr("__POS_Y__") >= event.selection[0][1] && +m.attr("__POS_Y__") <= event.selection[1][1];
        return inside ? "__HIGHLIGHT_COLOR__" : __MARK_COLOR__;
      });
    }));
