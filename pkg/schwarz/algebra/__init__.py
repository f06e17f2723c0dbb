# Exact rational functions and the Schwarzian
