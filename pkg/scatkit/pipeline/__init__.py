"""Processing steps: cases, wall crossing, theta functions, affine and tropical structure, periods."""
