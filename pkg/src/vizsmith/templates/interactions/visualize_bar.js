// Dropdown that picks which attribute the bars average
const encodingPicker = d3.select("#controls")
  .append("select")
  .attr("class", "encoding-picker");
// One option per encodable attribute found in the program
encodingPicker.selectAll("option")
  .data(__ENCODABLE_ATTRS__)
  .join("option")
  .attr("value", a => a)
  .text(a => a);
// Recompute the bar heights when the selection changes
encodingPicker.on("change", function() {
  const name = this.value;
  const updated = d3.rollups(__DATA_VAR__, v => d3.mean(v, d => +d[name]), d => d.__CAT_KEY__);
  __Y_SCALE__.domain([0, d3.max(updated, e => e[1])]).nice();
  __SVG_ROOT__.select(".y-axis").call(d3.axisLeft(__Y_SCALE__));
  __SVG_ROOT__.selectAll("__MARK_SELECTOR__")
    .data(updated)
    .transition()
    .duration(__TRANSITION_MS__)
    .attr("y", e => __Y_SCALE__(e[1]))
    .attr("height", e => __HEIGHT_EXPR__ - __Y_SCALE__(e[1]));
});
