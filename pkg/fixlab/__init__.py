# Fixlab - fixity of arc-transitive graphs, verified on concrete instances
__version__ = "1.0.0"
