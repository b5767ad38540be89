// Dropdown that picks which attribute the slices average
const encodingPicker = d3.select("#controls")
  .append("select")
  .attr("class", "encoding-picker");
// One option per encodable attribute found in the program
encodingPicker.selectAll("option")
  .data(__ENCODABLE_ATTRS__)
  .join("option")
  .attr("value", a => a)
  .text(a => a);
// Recompute the slice angles when the selection changes
encodingPicker.on("change", function() {
  const name = this.value;
  const updated = d3.rollups(__DATA_VAR__, v => d3.mean(v, d => +d[name]), d => d.__CAT_KEY__);
  __SVG_ROOT__.selectAll("__MARK_SELECTOR__")
    .data(__PIE_LAYOUT__(updated))
    .transition()
    .duration(__TRANSITION_MS__)
    .attr("d", __ARC_GEN__);
});
