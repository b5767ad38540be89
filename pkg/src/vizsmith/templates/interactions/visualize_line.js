// Dropdown that picks which attribute drives the vertical position
const encodingPicker = d3.select("#controls")
  .append("select")
  .attr("class", "encoding-picker");
// One option per encodable attribute found in the program
encodingPicker.selectAll("option")
  .data(__ENCODABLE_ATTRS__)
  .join("option")
  .attr("value", a => a)
  .text(a => a);
// Rescale and redraw the path when the selection changes
encodingPicker.on("change", function() {
  const name = this.value;
  __Y_SCALE__.domain([0, d3.max(__DATA_VAR__, d => +d[name])]).nice();
  __SVG_ROOT__.select(".y-axis").call(d3.axisLeft(__Y_SCALE__));
  __SVG_ROOT__.selectAll("__MARK_SELECTOR__")
    .transition()
    .duration(__TRANSITION_MS__)
    .attr("d", d3.line().x(d => __X_SCALE__(__X_VALUE_FN__(d))).y(d => __Y_SCALE__(+d[name])));
});
