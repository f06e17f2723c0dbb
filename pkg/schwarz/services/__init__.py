"""Service layer composing the domain modules for the command line."""
