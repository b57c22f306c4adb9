"""Square-root Euler classes and torus localization, in exact arithmetic."""
