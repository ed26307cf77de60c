# Orbital graphs, automorphism search and quotients
