// Chart dimensions and margins
const margin = { top: 20, right: 30, bottom: 40, left: 50 };
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
  // __DROPPED__ rows with a missing __X_ATTR__ or __Y_ATTR__ value are excluded
  const data = rows.filter(d => d.__X_ATTR__ !== "" && d.__Y_ATTR__ !== "");
  // Horizontal scale over the __X_ATTR__ values
  const x = d3.scaleLinear()
    .domain([0, d3.max(data, d => +d.__X_ATTR__)])
    .range([0, width])
    .nice();
  // Vertical scale over the __Y_ATTR__ values
  const y = d3.scaleLinear()
    .domain([0, d3.max(data, d => +d.__Y_ATTR__)])
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
  // One circle per row, positioned by __X_ATTR__ and __Y_ATTR__
  svg.append("g")
    .selectAll("circle")
    .data(data)
    .join("circle")
    .attr("class", "mark")
    .attr("cx", d => x(+d.__X_ATTR__))
    .attr("cy", d => y(+d.__Y_ATTR__))
    .attr("r", 4)
    .attr("fill", "#69b3a2");
});
