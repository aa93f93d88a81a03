"""Print the worked examples: two-row mitosis, MA_1 / MC_1 on the reference dreams, and the C_2 dual chains."""

from geomitosis import gz, pipedream as pd, schubert as sb, weyl

DREAM_A6 = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 1), (4, 1), (5, 1)]
DREAM_C4 = [(1, 1), (1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (4, 4)]


def banner(title: str) -> None:
    print(f"\n== {title} ==")


def main() -> None:
    banner("two-row mitosis, ell = 5")
    res = pd.two_row_mitosis(pd.BasicPipeDream.from_filled(5, (1, 2, 3, 4), (3,)))
    print(f"r = {res.r}, J = {list(res.J)}")
    for E in res.offsprings:
        print(E.render(), end="\n\n")

    banner("MA_1 on a type A_6 pipe dream")
    D = pd.PipeDreamA(6, DREAM_A6)
    print(pd.render(D), end="\n\n")
    for E in pd.mitosis_A(1, D):
        print(pd.render(E), end="\n\n")

    banner("the same dream as a Kogan face and its adapted mitosis")
    F = gz.face_of_diagram(gz.GZShape("A", 6), [gz.pd_to_gz_A(6, c) for c in DREAM_A6])
    print(f"{F}  dim {F.dim}")
    for G in gz.adapted_mitosis_A(1, F):
        print(f"{G}  dim {G.dim}")

    banner("MC_1 on a type C_4 skew pipe dream")
    D = pd.SkewPipeDreamC(4, DREAM_C4)
    for E in pd.mitosis_C(1, D):
        print(pd.render(E), end="\n\n")

    banner("dual mitosis chains in type C_2")
    rep = sb.compare_dual_chain_vs_subwords(2)
    for row in rep.rows:
        print(f"{row['name']:>9}: {row['chain']}  missing {row['missing']}")
    count, _ = sb.dual_face_count(2, weyl.evaluate("C", 2, (2, 1)))
    print(f"dual faces for s2s1 from subwords: {count}")


if __name__ == "__main__":
    main()
