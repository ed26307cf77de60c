# Group structure, fixity and brute-force oracles
