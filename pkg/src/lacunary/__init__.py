"""
lacunary: saddle-point asymptotics of the lacunary binomial-type polynomials.

The polynomials

    wp_n(z) = sum_{k=0}^{n} C(n, k) z^{k(k-1)/2}

are evaluated exactly (direct summation, quadrature of their Gaussian integral
representation) and through the steepest-descent expansion over the saddles of
the phase function psi(s) = s^2/(4n log x) - log(1 + x e^{is}), z = 1/x^2.

Packages:
    core: numerical modules and the LacunaryEngine facade
    data: reference values used by the reproduction harness
    cli:  command-line front end (``lacunary`` console script)
    api:  FastAPI service mirroring the CLI verbs
"""

__version__ = "0.1.0"
