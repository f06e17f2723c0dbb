# Numerical monodromy oracle
