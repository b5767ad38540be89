// Chart dimensions and margins
const margin = { top: 20, right: 20, bottom: 20, left: 20 };
const width = 440 - margin.left - margin.right;
const height = 440 - margin.top - margin.bottom;
// Radius of the pie, bounded by the smaller chart side
const radius = d3.min([width, height]) / 2;
// Create the SVG container centered on the pie
const svg = d3.select("#chart")
  .append("svg")
  .attr("width", width + margin.left + margin.right)
  .attr("height", height + margin.top + margin.bottom)
  .append("g")
  .attr("transform", "translate(" + (margin.left + width / 2) + "," + (margin.top + height / 2) + ")");
// Load the dataset, then build the chart from its rows
d3.csv("__DATA_URL__").then(rows => {
  // __DROPPED__ rows with a missing __CAT_ATTR__ or __VAL_ATTR__ value are excluded
  const data = rows.filter(d => d.__CAT_ATTR__ !== "" && d.__VAL_ATTR__ !== "");
  // Average __VAL_ATTR__ per __CAT_ATTR__ category, one entry per slice
  const slices = d3.rollups(data, v => d3.mean(v, d => +d.__VAL_ATTR__), d => d.__CAT_ATTR__);
  // One color per category
  const color = d3.scaleOrdinal()
    .domain(slices.map(e => e[0]))
    .range(d3.schemeTableau10);
  // Angular layout proportional to each averaged value
  const pie = d3.pie().value(e => e[1]);
  // Converts one angular slice into an arc path
  const arc = d3.arc().innerRadius(0).outerRadius(radius);
  // One filled arc per category
  svg.append("g")
    .selectAll("path")
    .data(pie(slices))
    .join("path")
    .attr("class", "mark")
    .attr("d", arc)
    .attr("fill", e => color(e.data[0]))
    .attr("stroke", "white");
});
