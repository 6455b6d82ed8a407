# Positive definite functions on finite inverse semigroups
