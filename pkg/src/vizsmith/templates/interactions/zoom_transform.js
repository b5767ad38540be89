__ANCHOR__
  .call(d3.zoom()
    .scaleExtent([__ZOOM_MIN__, __ZOOM_MAX__])
    .on("zoom", function(event) {
      // Apply the gesture's pan and scale to the plot group
      __SVG_ROOT__.attr("transform", event.transform);
    }));
