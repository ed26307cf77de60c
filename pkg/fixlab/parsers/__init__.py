# Group, graph and constants file formats
