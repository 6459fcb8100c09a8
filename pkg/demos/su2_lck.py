"""The su2 pipeline: the c = 1, t = 1 member is l.c.K., not Kahler.

Same construction as the clan demo, but the base has positive
curvature, so 1 + c t never vanishes for t > 0: no member of the
family is Kahler.  The c = 1, t = 1 member has Lee form -2 rho1, and
the catalog carries a note recording that this member is elsewhere
presented as Kahler.
"""

from liegeom import ce_d, dual_form, get_example, lck_family, wedge


def main():
    entry = get_example("su2")
    fam = lck_family(entry.algebra, entry.connection, entry.metric,
                     c=1, t=1)
    dbl = fam.double

    def render(form):
        parts = []
        for idx, value in form.components():
            names = "^".join(dbl.algebra.basis_labels[i] for i in idx)
            parts.append(f"{value}*{names}")
        return " + ".join(parts) if parts else "0"

    print("omega_1 =", render(fam.omega))
    print("lee form =", render(fam.lee_form))
    rho1 = dual_form(dbl.algebra, fam.cone.rho_index)
    print("d rho1 zero:", ce_d(dbl.algebra, rho1).is_zero())
    print("d omega_1 =", render(ce_d(dbl.algebra, fam.omega)))
    print("lee ^ omega =", render(wedge(fam.lee_form, fam.omega)))
    print("kahler:", fam.report.is_kahler, " lck:", fam.report.is_lck)

    for note in entry.notes:
        if note.key == "kahler-claim":
            print("note:", note.computed)


if __name__ == "__main__":
    main()
