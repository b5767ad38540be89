__ANCHOR__
  .on("click", function(event, d) {
    // Flip the clicked mark between the selection color and its base color
    const m = d3.select(this);
    m.attr("fill", m.attr("fill") === "__SELECT_COLOR__" ? __MARK_COLOR__ : "__SELECT_COLOR__");
  });
