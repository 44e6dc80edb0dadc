"""Character varieties of two-generator groups and their zeta functions."""
