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
  const kept = rows.filter(d => d.__X_ATTR__ !== "" && d.__Y_ATTR__ !== "");
  // Reads the __X_ATTR__ value of a row
  const xValue = d => __X_VALUE_EXPR__;
  // Reads the __Y_ATTR__ value of a row
  const yValue = d => +d.__Y_ATTR__;
  // Rows ordered along the horizontal axis
  const data = kept.slice().sort((a, b) => d3.ascending(xValue(a), xValue(b)));
  // Horizontal scale over the __X_ATTR__ values
  const x = __X_SCALE_CTOR__().domain(d3.extent(data, xValue)).range([0, width]);
  // Vertical scale over the __Y_ATTR__ values
  const y = d3.scaleLinear()
    .domain([0, d3.max(data, yValue)])
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
  // A filled region between the baseline and the __Y_ATTR__ values
  svg.append("path")
    .datum(data)
    .attr("class", "mark")
    .attr("fill", "#69b3a2")
    .attr("stroke", "#69b3a2")
    .attr("d", d3.area()
      .x(d => x(xValue(d)))
      .y0(height)
      .y1(d => y(yValue(d))));
});
