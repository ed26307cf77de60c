# Instance generators, built-in catalog and c(L) constants
