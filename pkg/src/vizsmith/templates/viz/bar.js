// Chart dimensions and margins
const margin = { top: 20, right: 30, bottom: 60, left: 50 };
const width = 640 - margin.left - margin.right;
const height = 400 - margin.top - margin.bottom;
// Create the SVG container and shift it by the margins
const svg = d3.select("#chart")
  .append("svg")
  .attr("width", width + margin.left + margin.right)
  .attr("height", height + margin.top + margin.bottom)
  .append("g")
  .attr("transform", "translate(" + margin.left + "," + margin.top + ")");
// Load the dataset, then build the chart from its rows
d3.csv("__DATA_URL__").then(rows => {
  // __DROPPED__ rows with a missing __CAT_ATTR__ or __VAL_ATTR__ value are excluded
  const data = rows.filter(d => d.__CAT_ATTR__ !== "" && d.__VAL_ATTR__ !== "");
  // Average __VAL_ATTR__ per __CAT_ATTR__ category, one entry per bar
  const bars = d3.rollups(data, v => d3.mean(v, d => +d.__VAL_ATTR__), d => d.__CAT_ATTR__);
  // One band per category across the horizontal extent
  const x = d3.scaleBand()
    .domain(bars.map(e => e[0]))
    .range([0, width])
    .padding(0.2);
  // Vertical scale over the averaged values
  const y = d3.scaleLinear()
    .domain([0, d3.max(bars, e => e[1])])
    .range([height, 0])
    .nice();
  // Axis along the bottom edge
  svg.append("g")
    .attr("class", "x-axis")
    .attr("transform", "translate(0," + height + ")")
    .call(d3.axisBottom(x));
  // Axis along the left edge
  svg.append("g")
    .attr("class", "y-axis")
    .call(d3.axisLeft(y));
  // One rectangle per category, rising from the baseline
  svg.append("g")
    .selectAll("rect")
    .data(bars)
    .join("rect")
    .attr("class", "mark")
    .attr("x", e => x(e[0]))
    .attr("y", e => y(e[1]))
    .attr("width", x.bandwidth())
    .attr("height", e => height - y(e[1]))
    .attr("fill", "#69b3a2");
});
