# Bound functions and lemma checkers
