"""tcalab: exact invariants of GL-equivariant modules over Sym(C^inf).

Subpackages are organized by what they compute:

    partitions   partition arithmetic, strips, border strips
    symchar      symmetric group characters, Littlewood-Richardson rule
    polynomials  sparse exact multivariate polynomials
    ktheory      Grothendieck group bases, pairing, Fourier involution
    hilbert      enhanced Hilbert series and character polynomials
    homalg       injective resolutions, local cohomology, depth, regularity
    quiver       finite quiver truncations used for machine verification
    cli          the tcalab command line tool
"""

__version__ = "0.1.0"
