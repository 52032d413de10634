"""SVG rendering."""
