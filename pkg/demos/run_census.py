"""Census of every LC class through six qubits, matched to the catalogue.

Prints one table row per class and the correlation summary.  The same
data is produced on disk by `lcorbits census --n 6 --out DIR` followed by
`lcorbits correlate --census DIR`.
"""

from lcorbits import correlation_report, enumerate_classes, stationary_distribution

records = []
for n in (4, 5, 6):
    census = enumerate_classes(n)
    print(f"\nn={n}: {census.class_count} classes")
    header = (
        "class |e| rwd |C| |E| chi_g chi_g_e chi_C chi_C_e tree "
        "mean max loop E H  #L x|L|"
    )
    print(header)
    for cls in census.classes:
        r = cls.record
        idx = ",".join(str(i) for i in cls.catalogue_matches) or "?"
        print(
            f"{idx:>5} {r.min_edges:>3} {r.rank_width:>3} {r.orbit_size:>3} "
            f"{r.orbit_edges:>3} {r.chi_g:>5} {r.chi_g_e:>7} {r.chi_orbit:>5} "
            f"{r.chi_orbit_e:>7} {str(r.is_tree):>5} {r.mean_distance:>5.2f} "
            f"{r.diameter:>3} {str(r.has_loop):>5} {str(r.eulerian):>5} "
            f"{str(r.hamiltonian):>5} {cls.labelled_orbit_count:>3}x"
            f"{cls.labelled_orbit_size}"
        )
        records.append(r)

report = correlation_report(records)
print(f"\ncorrelations over {report.dataset}:")
for e in report.entries:
    print(f"  r({e.x}, {e.y}) = {e.r:+.3f}")

census6 = enumerate_classes(6)
print("\nrandom-walk stationary distributions (total variation from uniform):")
for cls in census6.classes:
    _, tv = stationary_distribution(cls.orbit)
    print(f"  class {cls.catalogue_matches}: |C|={cls.record.orbit_size:>3} tv={tv:.4f}")
