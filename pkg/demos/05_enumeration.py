"""
Enumerating singularities above a threshold
===========================================

Bounded normalized volume caps both the index and the size of P, so the
list is finite.  Surfaces recover the cyclic quotients 1/k(1,a); threefolds
start with the smooth point and the quadric cone.
"""
from fractions import Fraction

from toricvol.enumerate import enumerate_polygons, enumerate_singularities, make_job, volume_spectrum
from toricvol.polytope import lattice_points

print("lattice polygons by normalized area bound:",
      [len(enumerate_polygons(v)) for v in range(1, 6)])
reflexive = [P for P in enumerate_polygons(9) if len(lattice_points(P, strict=True)) == 1]
print("reflexive polygons:", len(reflexive))

job = make_job(2, Fraction(1, 2))
print(job.notes)
spec = volume_spectrum(job)
for v, m in zip(spec.values, spec.multiplicities):
    print(f"  vol^ = {v}  ({m} classes)")

job = make_job(3, 8)
print(job.notes)
for e in enumerate_singularities(job):
    value = e.volume_value if e.exact else float(e.volume_value)
    print(f"  vol^ = {value}  ell = {e.ell}  rays {e.representative_rays}")
