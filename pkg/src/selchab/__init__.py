"""Selmer group Chabauty for y^2 = x^(2g+1) + h(x)^2 and iterated x^2 + c."""
