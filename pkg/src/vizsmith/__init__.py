"""vizsmith: chart-code workbench engine.

Fits visualization code templates to tabular datasets, recommends
complementary interactions from corpus statistics with online feedback, and
splices interaction code into user programs by anchor-point rewriting.
"""

__version__ = "0.1.0"
