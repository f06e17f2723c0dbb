# Power series and residual checks
