# Triangle equation and its linearization
