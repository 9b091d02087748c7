"""Package initialization for grobfan."""

__version__ = "1.0.0"
__author__ = "grobfan developers"
__description__ = "Gröbner fan enumeration by reverse search with exact rational arithmetic"
