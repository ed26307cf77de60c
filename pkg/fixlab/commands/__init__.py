# Fixlab - CLI command groups
