# Core data types
