// Chart dimensions and margins
const margin = { top: 20, right: 20, bottom: 20, left: 20 };
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
  // One node per row, keeping the row values for the encodings below
  const nodes = data.map((d, i) => ({ id: i, row: d }));
  // Chain consecutive rows so every node joins the trail
  const links = d3.range(nodes.length - 1).map(i => ({ source: i, target: i + 1 }));
  // One color per __CAT_ATTR__ category
  const color = d3.scaleOrdinal()
    .domain(data.map(d => d.__CAT_ATTR__))
    .range(d3.schemeTableau10);
  // Node radius scaled by the __VAL_ATTR__ value
  const r = d3.scaleLinear()
    .domain(d3.extent(data, d => +d.__VAL_ATTR__))
    .range([3, 9]);
  // Force layout spreading the trail across the chart
  const sim = d3.forceSimulation(nodes)
    .force("link", d3.forceLink(links))
    .force("charge", d3.forceManyBody().strength(-30))
    .force("center", d3.forceCenter(width / 2, height / 2));
  // One line per link between consecutive nodes
  const link = svg.append("g")
    .selectAll("line")
    .data(links)
    .join("line")
    .attr("class", "edge")
    .attr("stroke", "#999");
  // One circle per node, colored by category and sized by value
  const node = svg.append("g")
    .selectAll("circle")
    .data(nodes)
    .join("circle")
    .attr("class", "mark")
    .attr("r", e => r(+e.row.__VAL_ATTR__))
    .attr("fill", e => color(e.row.__CAT_ATTR__));
  // Reposition lines and circles on every simulation tick
  sim.on("tick", () => {
    link.attr("x1", e => e.source.x)
      .attr("y1", e => e.source.y)
      .attr("x2", e => e.target.x)
      .attr("y2", e => e.target.y);
    node.attr("cx", e => e.x).attr("cy", e => e.y);
  });
});
