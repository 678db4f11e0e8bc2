"""Services for orthogonality graphs over finite quadratic spaces."""
