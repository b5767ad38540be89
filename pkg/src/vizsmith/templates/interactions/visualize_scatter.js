// Dropdown that picks which attribute drives the horizontal position
const encodingPicker = d3.select("#controls")
  .append("select")
  .attr("class", "encoding-picker");
// One option per encodable attribute found in the program
encodingPicker.selectAll("option")
  .data(__ENCODABLE_ATTRS__)
  .join("option")
  .attr("value", a => a)
  .text(a => a);
// Rescale and reposition the marks when the selection changes
encodingPicker.on("change", function() {
  const name = this.value;
  __X_SCALE__.domain([0, d3.max(__SVG_ROOT__.selectAll("__MARK_SELECTOR__").data(), d => +d[name])]).nice();
  __SVG_ROOT__.select(".x-axis").call(d3.axisBottom(__X_SCALE__));
  __SVG_ROOT__.selectAll("__MARK_SELECTOR__")
    .transition()
    .duration(__TRANSITION_MS__)
    .attr("__POS_X__", d => __X_SCALE__(+d[name]));
});
