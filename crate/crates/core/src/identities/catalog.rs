//! Catalog entries. Left sides sum literally; right sides use the closed
//! forms, including exact 3×3 determinants.

use std::sync::Arc;

use num_traits::Zero;

use super::{Correction, Domain, IdentityDescriptor, Inadmissible, Param, Side};
use crate::harness::grid::parse_grid;
use crate::numeric::{
    binomial, det3, int, int_pow, rat_from_int, sign, waring_coeff, ExactInt, ExactRat, Mat3,
};
use crate::ring::{gamma_component_pair, gamma_component_ratio, set_entry, SetTableEntry};
use crate::sequences::{Seq, SeqEngine};

use Domain::{Integer, NonNegative, NonZero, PadovanZero, Positive, SetId};

type R = Result<ExactRat, Inadmissible>;

const SEQS: [Seq; 2] = [Seq::P, Seq::Q];

fn side<F>(f: F) -> Side
where
    F: Fn(&SeqEngine, &[i64]) -> R + Send + Sync + 'static,
{
    Arc::new(f)
}

/// Side with an integer value.
fn iside<F>(f: F) -> Side
where
    F: Fn(&SeqEngine, &[i64]) -> ExactInt + Send + Sync + 'static,
{
    Arc::new(move |e, v| Ok(rat_from_int(f(e, v))))
}

fn entry(
    id: &str,
    title: &str,
    anchor: &str,
    params: &[(&'static str, Domain)],
    grid: &str,
    lhs: Side,
    rhs: Side,
) -> IdentityDescriptor {
    IdentityDescriptor {
        id: id.to_string(),
        title: title.to_string(),
        anchor: anchor.to_string(),
        params: params.iter().map(|&(name, domain)| Param { name, domain }).collect(),
        default_grid: parse_grid(grid).unwrap_or_else(|e| panic!("default grid of {id}: {e}")),
        errata_watch: false,
        corrections: Vec::new(),
        lhs,
        rhs,
    }
}

fn watch(mut d: IdentityDescriptor, corrections: Vec<Correction>) -> IdentityDescriptor {
    d.errata_watch = true;
    d.corrections = corrections;
    d
}

fn name(kind: Seq) -> &'static str {
    match kind {
        Seq::P => "P",
        Seq::Q => "Q",
    }
}

/// Substitutes the sequence letter for the placeholder `S` in a template.
fn lettered(template: &str, kind: Seq) -> String {
    template.replace("S_", &format!("{}_", name(kind)))
}

fn set(id: i64) -> SetTableEntry {
    set_entry(id).expect("set id checked by its domain")
}

/// `base^exp` for `exp ≥ 0`.
fn ipow(base: i64, exp: i64) -> ExactInt {
    int_pow(&int(base), u32::try_from(exp).expect("non-negative exponent"))
}

/// Powers `base⁰ ..= base^n`.
fn powers(base: &ExactInt, n: i64) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = int(1);
    for _ in 0..=n {
        out.push(acc.clone());
        acc *= base;
    }
    out
}

fn nonzero_list(bound: i64) -> String {
    let v: Vec<String> = (-bound..=bound).filter(|&x| x != 0).map(|x| x.to_string()).collect();
    v.join(",")
}

fn det_cols(c1: [ExactInt; 3], c2: [ExactInt; 3], c3: [ExactInt; 3]) -> ExactRat {
    let [a0, a1, a2] = c1.map(rat_from_int);
    let [b0, b1, b2] = c2.map(rat_from_int);
    let [d0, d1, d2] = c3.map(rat_from_int);
    det3(&Mat3::new([[a0, b0, d0], [a1, b1, d1], [a2, b2, d2]]))
}

fn ratio(num: ExactRat, den: ExactRat, what: &str) -> R {
    if den.is_zero() {
        return Err(Inadmissible(format!("{what}: denominator determinant vanishes")));
    }
    Ok(num / den)
}

/// Closed form of `Σ_{j=0}^n S_{kj+q}` given the numerator's first column.
fn ap_ratio(e: &SeqEngine, k: i64, col: [ExactInt; 3], what: &str) -> R {
    let p = |i: i64| e.p(k + i);
    let one = int(1);
    let den = det_cols(
        [p(-2) - &one, p(-1), p(-3)],
        [p(-3), p(-2) - &one, p(-4)],
        [p(-4), p(-3), p(-5) - &one],
    );
    let num = det_cols(col, [p(-3), p(-2) - &one, p(-4)], [p(-4), p(-3), p(-5) - &one]);
    ratio(num, den, what)
}

/// First numerator column of the γ² component of `(αʳ − βʳ)γᵗ/(αˢ − βˢ)`.
fn lemma_col(e: &SeqEngine, r: i64, t: i64) -> [ExactInt; 3] {
    let (r4, r3) = (e.p(r - 4), e.p(r - 3));
    [
        e.p(t - 3) * &r4 - e.p(t - 4) * &r3,
        e.p(t - 2) * &r4 - e.p(t - 3) * &r3,
        e.p(t - 4) * &r4 - e.p(t - 5) * &r3,
    ]
}

/// Ratio of the lemma determinants with diagonal signs `num_diag`, `den_diag`
/// on the `s3` entries.
fn lemma_ratio(col: [ExactInt; 3], s3: &ExactInt, s4: &ExactInt, num_diag: i64, den_diag: i64, what: &str) -> R {
    let z = ExactInt::zero;
    let ns3 = s3 * num_diag;
    let ds3 = s3 * den_diag;
    let num = det_cols(col, [s4.clone(), ns3.clone(), z()], [z(), s4.clone(), ns3]);
    let den = det_cols(
        [ds3.clone(), s4.clone(), s4.clone()],
        [s4.clone(), ds3.clone(), z()],
        [z(), s4.clone(), ds3],
    );
    ratio(num, den, what)
}

pub(super) fn entries() -> Vec<IdentityDescriptor> {
    let mut out = Vec::new();
    index_identities(&mut out);
    progression_sums(&mut out);
    weighted_sums(&mut out);
    product_sums(&mut out);
    binomial_sums(&mut out);
    waring_sums(&mut out);
    double_binomial_products(&mut out);
    double_binomial_waring(&mut out);
    lemmas(&mut out);
    out
}

fn index_identities(out: &mut Vec<IdentityDescriptor>) {
    let n15 = "n=-15..15";
    let pn15 = "p=-15..15;n=-15..15";
    let lam = "lambda=-17,-8,-4,-3,-1;n=-15..15";

    out.push(entry(
        "neg-index-P",
        "Padovan numbers at negative index",
        "P_{-n} = P_{n-7}^2 - P_{n-6}P_{n-8}",
        &[("n", Integer)],
        n15,
        iside(|e, v| e.p(-v[0])),
        iside(|e, v| {
            let n = v[0];
            e.p(n - 7) * e.p(n - 7) - e.p(n - 6) * e.p(n - 8)
        }),
    ));
    out.push(entry(
        "neg-index-Q",
        "Perrin numbers at negative index",
        "2Q_{-n} = Q_n^2 - Q_{2n}",
        &[("n", Integer)],
        n15,
        iside(|e, v| e.q(-v[0]) * 2),
        iside(|e, v| {
            let n = v[0];
            e.q(n) * e.q(n) - e.q(2 * n)
        }),
    ));
    out.push(entry(
        "shift-theorem-1",
        "Shift identity mixing Q_n and Q_{-n}",
        "Q_{-n}P_p - P_{p-n} = Q_nP_{p+n} - P_{p+2n}",
        &[("p", Integer), ("n", Integer)],
        pn15,
        iside(|e, v| {
            let (p, n) = (v[0], v[1]);
            e.q(-n) * e.p(p) - e.p(p - n)
        }),
        iside(|e, v| {
            let (p, n) = (v[0], v[1]);
            e.q(n) * e.p(p + n) - e.p(p + 2 * n)
        }),
    ));
    out.push(entry(
        "shift-theorem-2",
        "Shift identity for products of Padovan numbers",
        "P_pP_{-n-3} - P_{p+1}P_{-n-4} = P_{p+n+1}P_{n-4} - P_{p+n}P_{n-3}",
        &[("p", Integer), ("n", Integer)],
        pn15,
        iside(|e, v| {
            let (p, n) = (v[0], v[1]);
            e.p(p) * e.p(-n - 3) - e.p(p + 1) * e.p(-n - 4)
        }),
        iside(|e, v| {
            let (p, n) = (v[0], v[1]);
            e.p(p + n + 1) * e.p(n - 4) - e.p(p + n) * e.p(n - 3)
        }),
    ));

    let lp = [("lambda", PadovanZero), ("n", Integer)];
    out.push(entry(
        "lambda-corollary-1",
        "Negative index through a Padovan zero",
        "P_{-n} = P_{2n+3lambda} - Q_{n+lambda}P_{n+2lambda}, P_lambda = 0",
        &lp,
        lam,
        iside(|e, v| e.p(-v[1])),
        iside(|e, v| {
            let (l, n) = (v[0], v[1]);
            e.p(2 * n + 3 * l) - e.q(n + l) * e.p(n + 2 * l)
        }),
    ));
    out.push(entry(
        "lambda-corollary-2",
        "Perrin negative index through a Padovan zero",
        "P_{n+lambda}Q_{-n} = P_{2n+lambda}Q_n - P_{3n+lambda}, P_lambda = 0",
        &lp,
        lam,
        iside(|e, v| {
            let (l, n) = (v[0], v[1]);
            e.p(n + l) * e.q(-n)
        }),
        iside(|e, v| {
            let (l, n) = (v[0], v[1]);
            e.p(2 * n + l) * e.q(n) - e.p(3 * n + l)
        }),
    ));
    out.push(entry(
        "lambda-corollary-3",
        "Perrin negative index from positive indices",
        "Q_{-n} = Q_nP_n - Q_{n-1}P_{n-2} - P_{2n-2}",
        &[("n", Integer)],
        n15,
        iside(|e, v| e.q(-v[0])),
        iside(|e, v| {
            let n = v[0];
            e.q(n) * e.p(n) - e.q(n - 1) * e.p(n - 2) - e.p(2 * n - 2)
        }),
    ));
    out.push(entry(
        "lambda-corollary-4",
        "Padovan negative index weighted by P_{lambda+1}",
        "P_{lambda+1}P_{-n} = P_{lambda+n-4}P_{n-7} - P_{lambda+n-3}P_{n-8}, P_lambda = 0",
        &lp,
        lam,
        iside(|e, v| {
            let (l, n) = (v[0], v[1]);
            e.p(l + 1) * e.p(-n)
        }),
        iside(|e, v| {
            let (l, n) = (v[0], v[1]);
            e.p(l + n - 4) * e.p(n - 7) - e.p(l + n - 3) * e.p(n - 8)
        }),
    ));
    out.push(entry(
        "lambda-corollary-5",
        "Padovan negative index weighted by P_{lambda-1}",
        "P_{lambda-1}P_{-n} = P_{lambda+n-3}P_{n-7} - P_{lambda+n-4}P_{n-6}, P_lambda = 0",
        &lp,
        lam,
        iside(|e, v| {
            let (l, n) = (v[0], v[1]);
            e.p(l - 1) * e.p(-n)
        }),
        iside(|e, v| {
            let (l, n) = (v[0], v[1]);
            e.p(l + n - 3) * e.p(n - 7) - e.p(l + n - 4) * e.p(n - 6)
        }),
    ));
    out.push(entry(
        "addition-formula",
        "Addition formula",
        "P_{m+n} = P_mP_{n-5} + P_{m+1}P_{n-3} + P_{m+2}P_{n-4}",
        &[("m", Integer), ("n", Integer)],
        "m=-15..15;n=-15..15",
        iside(|e, v| e.p(v[0] + v[1])),
        iside(|e, v| {
            let (m, n) = (v[0], v[1]);
            e.p(m) * e.p(n - 5) + e.p(m + 1) * e.p(n - 3) + e.p(m + 2) * e.p(n - 4)
        }),
    ));
    out.push(entry(
        "perrin-via-padovan-1",
        "Perrin numbers from two Padovan numbers",
        "Q_n = 2P_{n-4} + 3P_{n-5}",
        &[("n", Integer)],
        n15,
        iside(|e, v| e.q(v[0])),
        iside(|e, v| e.p(v[0] - 4) * 2 + e.p(v[0] - 5) * 3),
    ));
    out.push(entry(
        "perrin-via-padovan-2",
        "Perrin numbers from two Padovan numbers, shifted form",
        "Q_n = 2P_{n-2} + P_{n-5}",
        &[("n", Integer)],
        n15,
        iside(|e, v| e.q(v[0])),
        iside(|e, v| e.p(v[0] - 2) * 2 + e.p(v[0] - 5)),
    ));
}

fn progression_sums(out: &mut Vec<IdentityDescriptor>) {
    let grid = format!("p={};q=-8..8;n=0..20", nonzero_list(8));
    for kind in SEQS {
        out.push(entry(
            &format!("ap-sum-{}", name(kind)),
            &format!("Sum of {} numbers with indices in arithmetic progression", name(kind)),
            &lettered(
                "sum_{j=0}^n S_{pj+q} = det[[S_{pn+p+q}-S_q, P_{p-3}, P_{p-4}], [S_{pn+p+q+1}-S_{q+1}, P_{p-2}-1, P_{p-3}], [S_{pn+p+q-1}-S_{q-1}, P_{p-4}, P_{p-5}-1]] / det[[P_{p-2}-1, P_{p-3}, P_{p-4}], [P_{p-1}, P_{p-2}-1, P_{p-3}], [P_{p-3}, P_{p-4}, P_{p-5}-1]]",
                kind,
            ),
            &[("p", NonZero), ("q", Integer), ("n", NonNegative)],
            &grid,
            iside(move |e, v| {
                let (p, q, n) = (v[0], v[1], v[2]);
                (0..=n).map(|j| e.term(kind, p * j + q)).sum()
            }),
            side(move |e, v| {
                let (p, q, n) = (v[0], v[1], v[2]);
                let s = |i: i64| e.term(kind, i);
                let top = p * n + p + q;
                let col = [s(top) - s(q), s(top + 1) - s(q + 1), s(top - 1) - s(q - 1)];
                ap_ratio(e, p, col, "progression sum")
            }),
        ));
        out.push(entry(
            &format!("ap-sum-{}-special", name(kind)),
            &format!("Sum of consecutive {} numbers", name(kind)),
            &lettered("sum_{j=0}^n S_{j+q} = S_{n+q+5} - S_{q+4}", kind),
            &[("q", Integer), ("n", NonNegative)],
            "q=-15..15;n=0..20",
            iside(move |e, v| (0..=v[1]).map(|j| e.term(kind, j + v[0])).sum()),
            iside(move |e, v| {
                let (q, n) = (v[0], v[1]);
                e.term(kind, n + q + 5) - e.term(kind, q + 4)
            }),
        ));
    }
}

/// `b·wᵢ·Σ_{j=0}^n a^{n−j}·u_j·S_{base+step·j}`, with `u_j = f^j` when
/// `inner_weight` is set and the outer weight `f^{n+1}` otherwise.
fn weighted_lhs(e: &SeqEngine, kind: Seq, s: &SetTableEntry, base: i64, n: i64, inner_weight: bool) -> ExactInt {
    let step = s.e - s.c;
    let mut acc = ExactInt::zero();
    for j in 0..=n {
        let mut t = ipow(s.a, n - j) * e.term(kind, base + step * j);
        if inner_weight {
            t *= ipow(s.f, j);
        }
        acc += t;
    }
    let outer = if inner_weight { int(1) } else { ipow(s.f, n + 1) };
    acc * s.b * outer
}

fn weighted_sums(out: &mut Vec<IdentityDescriptor>) {
    let fix = "move the weight f inside the sum as f^j, dropping the prefactor f^{n+1}";
    for kind in SEQS {
        let lhs_general = move |inner: bool| {
            iside(move |e, v| {
                let (s, m, r, n) = (set(v[0]), v[1], v[2], v[3]);
                weighted_lhs(e, kind, &s, m + s.d + (m + s.c) * r - 4, n, inner)
            })
        };
        let general = entry(
            &format!("weighted-sum-{}", name(kind)),
            &format!("Weighted {} sums over the coefficient table", name(kind)),
            &lettered(
                "bf^{n+1} sum_{j=0}^n a^{n-j} S_{m+d+(m+c)r-4+(e-c)j} = f^{n+1} S_{(m+c)r+(e-c)n+m+e-4} - a^{n+1} S_{(m+c)(r+1)-4}",
                kind,
            ),
            &[("set", SetId), ("m", Integer), ("r", Integer), ("n", NonNegative)],
            "set=1..15;m=-10..10;r=-5..5;n=0..12",
            lhs_general(false),
            iside(move |e, v| {
                let (s, m, r, n) = (set(v[0]), v[1], v[2], v[3]);
                ipow(s.f, n + 1) * e.term(kind, (m + s.c) * r + (s.e - s.c) * n + m + s.e - 4)
                    - ipow(s.a, n + 1) * e.term(kind, (m + s.c) * (r + 1) - 4)
            }),
        );
        out.push(watch(
            general,
            vec![Correction {
                label: fix.into(),
                edits: 1,
                lhs: Some(lhs_general(true)),
                rhs: None,
            }],
        ));

        let lhs_diag = move |inner: bool| {
            iside(move |e, v| {
                let (s, m, n) = (set(v[0]), v[1], v[2]);
                weighted_lhs(e, kind, &s, m + s.d + (m + s.c) * n - 4, n, inner)
            })
        };
        let diag = entry(
            &format!("weighted-sum-diag-{}", name(kind)),
            &format!("Weighted {} sums with r = n", name(kind)),
            &lettered(
                "bf^{n+1} sum_{j=0}^n a^{n-j} S_{m+d+(m+c)n-4+(e-c)j} = f^{n+1} S_{(m+e)(n+1)-4} - a^{n+1} S_{(m+c)(n+1)-4}",
                kind,
            ),
            &[("set", SetId), ("m", Integer), ("n", NonNegative)],
            "set=1..15;m=-10..10;n=0..12",
            lhs_diag(false),
            iside(move |e, v| {
                let (s, m, n) = (set(v[0]), v[1], v[2]);
                ipow(s.f, n + 1) * e.term(kind, (m + s.e) * (n + 1) - 4)
                    - ipow(s.a, n + 1) * e.term(kind, (m + s.c) * (n + 1) - 4)
            }),
        );
        out.push(watch(
            diag,
            vec![Correction {
                label: fix.into(),
                edits: 1,
                lhs: Some(lhs_diag(true)),
                rhs: None,
            }],
        ));

        let params = [("m", Integer), ("r", Integer), ("n", NonNegative)];
        let grid = "m=-10..10;r=-5..5;n=0..12";
        out.push(entry(
            &format!("weighted-sum-set1-{}", name(kind)),
            &format!("Weighted {} sum, set 1", name(kind)),
            &lettered("sum_{j=0}^n S_{m+(m+1)r-5-3j} = S_{(m+1)(r+1)-4} - S_{(m+1)r-3n+m-6}", kind),
            &params,
            grid,
            iside(move |e, v| {
                let (m, r, n) = (v[0], v[1], v[2]);
                (0..=n).map(|j| e.term(kind, m + (m + 1) * r - 5 - 3 * j)).sum()
            }),
            iside(move |e, v| {
                let (m, r, n) = (v[0], v[1], v[2]);
                e.term(kind, (m + 1) * (r + 1) - 4) - e.term(kind, (m + 1) * r - 3 * n + m - 6)
            }),
        ));
        out.push(entry(
            &format!("weighted-sum-set7-{}", name(kind)),
            &format!("Weighted {} sum, set 7", name(kind)),
            &lettered(
                "sum_{j=0}^n 2^{n-j} S_{m+(m-1)r-3-5j} = 2^{n+1} S_{(m-1)(r+1)-4} - S_{(m-1)r-5n+m-10}",
                kind,
            ),
            &params,
            grid,
            iside(move |e, v| {
                let (m, r, n) = (v[0], v[1], v[2]);
                (0..=n).map(|j| ipow(2, n - j) * e.term(kind, m + (m - 1) * r - 3 - 5 * j)).sum()
            }),
            iside(move |e, v| {
                let (m, r, n) = (v[0], v[1], v[2]);
                ipow(2, n + 1) * e.term(kind, (m - 1) * (r + 1) - 4) - e.term(kind, (m - 1) * r - 5 * n + m - 10)
            }),
        ));
        out.push(entry(
            &format!("weighted-sum-set10-{}", name(kind)),
            &format!("Weighted {} sum, set 10", name(kind)),
            &lettered(
                "sum_{j=0}^n 2^{n-j} S_{m+(m+2)r-6+3j} = S_{(m+2)r+3n+m+1} - 2^{n+1} S_{(m+2)(r+1)-4}",
                kind,
            ),
            &params,
            grid,
            iside(move |e, v| {
                let (m, r, n) = (v[0], v[1], v[2]);
                (0..=n).map(|j| ipow(2, n - j) * e.term(kind, m + (m + 2) * r - 6 + 3 * j)).sum()
            }),
            iside(move |e, v| {
                let (m, r, n) = (v[0], v[1], v[2]);
                e.term(kind, (m + 2) * r + 3 * n + m + 1) - ipow(2, n + 1) * e.term(kind, (m + 2) * (r + 1) - 4)
            }),
        ));
    }
}

fn product_sums(out: &mut Vec<IdentityDescriptor>) {
    out.push(entry(
        "product-sum",
        "Sum of products P_{q-pj}Q_{p(n-2j)}",
        "sum_{j=0}^n P_{q-pj}Q_{p(n-2j)} = det[[P_{pn+3p+q}-P_{q-2pn}, P_{3p-3}, P_{3p-4}], [P_{pn+3p+q+1}-P_{q-2pn+1}, P_{3p-2}-1, P_{3p-3}], [P_{pn+3p+q-1}-P_{q-2pn-1}, P_{3p-4}, P_{3p-5}-1]] / det[[P_{3p-2}-1, P_{3p-3}, P_{3p-4}], [P_{3p-1}, P_{3p-2}-1, P_{3p-3}], [P_{3p-3}, P_{3p-4}, P_{3p-5}-1]] + 2 det[[P_{q+1}P_{pn+p-4}-P_qP_{pn+p-3}, P_{p-4}, 0], [P_{q+2}P_{pn+p-4}-P_{q+1}P_{pn+p-3}, -P_{p-3}, P_{p-4}], [P_qP_{pn+p-4}-P_{q-1}P_{pn+p-3}, 0, -P_{p-3}]] / det[[-P_{p-3}, P_{p-4}, 0], [P_{p-4}, -P_{p-3}, P_{p-4}], [P_{p-4}, 0, -P_{p-3}]]",
        &[("p", NonZero), ("q", Integer), ("n", NonNegative)],
        &format!("p={};q=-8..8;n=0..20", nonzero_list(8)),
        iside(|e, v| {
            let (p, q, n) = (v[0], v[1], v[2]);
            (0..=n).map(|j| e.p(q - p * j) * e.q(p * (n - 2 * j))).sum()
        }),
        side(|e, v| {
            let (p, q, n) = (v[0], v[1], v[2]);
            let top = p * n + 3 * p + q;
            let low = q - 2 * p * n;
            let col = [e.p(top) - e.p(low), e.p(top + 1) - e.p(low + 1), e.p(top - 1) - e.p(low - 1)];
            let first = ap_ratio(e, 3 * p, col, "first term")?;
            let second = lemma_ratio(lemma_col(e, p * n + p, q + 4), &e.p(p - 3), &e.p(p - 4), -1, -1, "second term")?;
            Ok(first + second * rat_from_int(int(2)))
        }),
    ));
    out.push(entry(
        "product-sum-unit-step",
        "Sum of products P_{q-j}Q_{n-2j}",
        "sum_{j=0}^n P_{q-j}Q_{n-2j} = P_{n+q+2} - P_{q-2n-1} - 2(P_{q+1}P_{n-3} - P_qP_{n-2})",
        &[("q", Integer), ("n", NonNegative)],
        "q=-15..15;n=0..20",
        iside(|e, v| {
            let (q, n) = (v[0], v[1]);
            (0..=n).map(|j| e.p(q - j) * e.q(n - 2 * j)).sum()
        }),
        iside(|e, v| {
            let (q, n) = (v[0], v[1]);
            e.p(n + q + 2) - e.p(q - 2 * n - 1) - (e.p(q + 1) * e.p(n - 3) - e.p(q) * e.p(n - 2)) * 2
        }),
    ));
}

/// Explicit binomial forms: `Σ_j sign^j·C(n,j)·w^j·S_{(m+u)n+p+step·j} = rsign^n·scale^n·S_{(m+v)n+p}`.
struct BinomForm {
    set_id: u8,
    alt: bool,
    w: i64,
    u: i64,
    step: i64,
    ralt: bool,
    scale: i64,
    v: i64,
    anchor: &'static str,
}

fn binomial_sums(out: &mut Vec<IdentityDescriptor>) {
    for kind in SEQS {
        out.push(entry(
            &format!("binom-set-{}", name(kind)),
            &format!("Binomial {} sums over the coefficient table", name(kind)),
            &lettered("sum_{j=0}^n C(n,j) a^j b^{n-j} S_{(m+d)n+p+(c-d)j} = f^n S_{(m+e)n+p}", kind),
            &[("set", SetId), ("m", Integer), ("p", Integer), ("n", NonNegative)],
            "set=1..15;m=-10..10;p=-8..8;n=0..12",
            iside(move |e, v| {
                let (s, m, p, n) = (set(v[0]), v[1], v[2], v[3]);
                (0..=n)
                    .map(|j| binomial(n, j) * ipow(s.a, j) * ipow(s.b, n - j) * e.term(kind, (m + s.d) * n + p + (s.c - s.d) * j))
                    .sum()
            }),
            iside(move |e, v| {
                let (s, m, p, n) = (set(v[0]), v[1], v[2], v[3]);
                ipow(s.f, n) * e.term(kind, (m + s.e) * n + p)
            }),
        ));
    }

    let forms = [
        BinomForm { set_id: 1, alt: true, w: 1, u: -1, step: 2, ralt: true, scale: 1, v: -2,
            anchor: "sum_{j=0}^n (-1)^j C(n,j) S_{(m-1)n+p+2j} = (-1)^n S_{(m-2)n+p}" },
        BinomForm { set_id: 4, alt: false, w: 1, u: -2, step: 4, ralt: false, scale: 1, v: 3,
            anchor: "sum_{j=0}^n C(n,j) S_{(m-2)n+p+4j} = S_{(m+3)n+p}" },
        BinomForm { set_id: 7, alt: true, w: 2, u: 1, step: -2, ralt: true, scale: 1, v: -6,
            anchor: "sum_{j=0}^n (-1)^j C(n,j) 2^j S_{(m+1)n+p-2j} = (-1)^n S_{(m-6)n+p}" },
        BinomForm { set_id: 10, alt: false, w: 2, u: -2, step: 4, ralt: false, scale: 1, v: 5,
            anchor: "sum_{j=0}^n 2^j C(n,j) S_{(m-2)n+p+4j} = S_{(m+5)n+p}" },
        BinomForm { set_id: 13, alt: true, w: 1, u: -7, step: 14, ralt: true, scale: 4, v: 2,
            anchor: "sum_{j=0}^n (-1)^j C(n,j) S_{(m-7)n+p+14j} = (-1)^n 4^n S_{(m+2)n+p}" },
    ];
    for kind in SEQS {
        for f in &forms {
            let BinomForm { alt, w, u, step, ralt, scale, v: shift, .. } = *f;
            out.push(entry(
                &format!("binom-set{}-{}", f.set_id, name(kind)),
                &format!("Binomial {} sum, set {}", name(kind), f.set_id),
                &lettered(f.anchor, kind),
                &[("m", Integer), ("p", Integer), ("n", NonNegative)],
                "m=-10..10;p=-8..8;n=0..12",
                iside(move |e, v| {
                    let (m, p, n) = (v[0], v[1], v[2]);
                    (0..=n)
                        .map(|j| {
                            let sg = if alt { sign(j) } else { 1 };
                            binomial(n, j) * ipow(w, j) * sg * e.term(kind, (m + u) * n + p + step * j)
                        })
                        .sum()
                }),
                iside(move |e, v| {
                    let (m, p, n) = (v[0], v[1], v[2]);
                    let sg = if ralt { sign(n) } else { 1 };
                    ipow(scale, n) * sg * e.term(kind, (m + shift) * n + p)
                }),
            ));
        }
    }
}

/// `C(n−j, j)`, the coefficient of the dual Waring expansion.
fn dual_coeff(n: i64, j: i64) -> ExactInt {
    binomial(n - j, j)
}

/// Explicit Waring forms:
/// `Σ_{j≤n/2} sign^j·W(n,j)·w^j·2^{t(n−2j)}·S_{(m+u)n+p+step·j} = A^n S_{(m+c)n+p} + B^n S_{(m+d)n+p}`
/// where `B^n` is `(−1)^n` when `b_alt` is set.
struct WaringForm {
    set_id: u8,
    alt: bool,
    w: i64,
    two_pow: i64,
    u: i64,
    step: i64,
    a: i64,
    c: i64,
    b_alt: bool,
    d: i64,
    anchor: &'static str,
}

fn waring_sums(out: &mut Vec<IdentityDescriptor>) {
    let pn1 = "p=-8..8;n=1..20";
    let pn0 = "p=-8..8;n=0..20";
    type Rhs = fn(&SeqEngine, i64, i64) -> ExactInt;
    let basic: [(&str, bool, i64, i64, &str, Rhs); 6] = [
        ("waring-basic-1", false, 1, -3,
            "sum_{j=0}^{n/2} (-1)^j n/(n-j) C(n-j,j) P_{p+n-3j} = (-1)^n (Q_nP_p - P_{n+p})",
            |e, p, n| (e.q(n) * e.p(p) - e.p(n + p)) * sign(n)),
        ("waring-basic-2", true, 1, -3,
            "sum_{j=0}^{n/2} (-1)^j C(n-j,j) P_{p+n-3j} = (-1)^{n-1} (P_{p+1}P_{n-3} - P_pP_{n-2})",
            |e, p, n| (e.p(p + 1) * e.p(n - 3) - e.p(p) * e.p(n - 2)) * sign(n - 1)),
        ("waring-basic-3", false, -4, 8,
            "sum_{j=0}^{n/2} (-1)^j n/(n-j) C(n-j,j) P_{p-4n+8j} = P_{p+n}Q_{2n} - P_{p+3n}",
            |e, p, n| e.p(p + n) * e.q(2 * n) - e.p(p + 3 * n)),
        ("waring-basic-4", true, -4, 8,
            "sum_{j=0}^{n/2} (-1)^j C(n-j,j) P_{p-4n+8j} = P_{p+n}P_{2n-2} - P_{p+n-1}P_{2n-1}",
            |e, p, n| e.p(p + n) * e.p(2 * n - 2) - e.p(p + n - 1) * e.p(2 * n - 1)),
        ("waring-basic-5", false, -3, 8,
            "sum_{j=0}^{n/2} (-1)^j n/(n-j) C(n-j,j) P_{p-3n+8j} = P_{2n+p}Q_{2n} - P_{p+4n}",
            |e, p, n| e.p(2 * n + p) * e.q(2 * n) - e.p(p + 4 * n)),
        ("waring-basic-6", true, -3, 8,
            "sum_{j=0}^{n/2} (-1)^j C(n-j,j) P_{p-3n+8j} = P_{2n+p}P_{2n-2} - P_{2n+p-1}P_{2n-1}",
            |e, p, n| e.p(2 * n + p) * e.p(2 * n - 2) - e.p(2 * n + p - 1) * e.p(2 * n - 1)),
    ];
    for (id, dual, nmul, step, anchor, rhs) in basic {
        let (title, n_dom, grid) = if dual {
            ("Dual Waring expansion of a Padovan index", NonNegative, pn0)
        } else {
            ("Waring expansion of a Padovan index", Positive, pn1)
        };
        out.push(entry(
            id,
            title,
            anchor,
            &[("p", Integer), ("n", n_dom)],
            grid,
            iside(move |e, v| {
                let (p, n) = (v[0], v[1]);
                let coeff = if dual { dual_coeff } else { waring_coeff };
                (0..=n / 2).map(|j| coeff(n, j) * sign(j) * e.p(p + nmul * n + step * j)).sum()
            }),
            iside(move |e, v| rhs(e, v[0], v[1])),
        ));
    }

    for kind in SEQS {
        out.push(entry(
            &format!("waring-set-{}", name(kind)),
            &format!("Waring {} sums over the coefficient table", name(kind)),
            &lettered(
                "sum_{j=0}^{n/2} (-1)^j n/(n-j) C(n-j,j) a^j b^j f^{n-2j} S_{(m+e)n+p+(c-2e+d)j} = a^n S_{(m+c)n+p} + b^n S_{(m+d)n+p}",
                kind,
            ),
            &[("set", SetId), ("m", Integer), ("p", Integer), ("n", Positive)],
            "set=1..15;m=-10..10;p=-8..8;n=1..12",
            iside(move |e, v| {
                let (s, m, p, n) = (set(v[0]), v[1], v[2], v[3]);
                (0..=n / 2)
                    .map(|j| {
                        waring_coeff(n, j) * sign(j) * ipow(s.a * s.b, j) * ipow(s.f, n - 2 * j)
                            * e.term(kind, (m + s.e) * n + p + (s.c - 2 * s.e + s.d) * j)
                    })
                    .sum()
            }),
            iside(move |e, v| {
                let (s, m, p, n) = (set(v[0]), v[1], v[2], v[3]);
                ipow(s.a, n) * e.term(kind, (m + s.c) * n + p) + ipow(s.b, n) * e.term(kind, (m + s.d) * n + p)
            }),
        ));
    }

    let forms = [
        WaringForm { set_id: 1, alt: false, w: 1, two_pow: 0, u: -2, step: 4, a: 1, c: 1, b_alt: true, d: -1,
            anchor: "sum_{j=0}^{n/2} n/(n-j) C(n-j,j) S_{(m-2)n+p+4j} = S_{(m+1)n+p} + (-1)^n S_{(m-1)n+p}" },
        WaringForm { set_id: 4, alt: true, w: 1, two_pow: 0, u: 3, step: -6, a: 1, c: 2, b_alt: false, d: -2,
            anchor: "sum_{j=0}^{n/2} (-1)^j n/(n-j) C(n-j,j) S_{(m+3)n+p-6j} = S_{(m+2)n+p} + S_{(m-2)n+p}" },
        WaringForm { set_id: 7, alt: false, w: 2, two_pow: 0, u: -6, step: 12, a: 2, c: -1, b_alt: true, d: 1,
            anchor: "sum_{j=0}^{n/2} n/(n-j) C(n-j,j) 2^j S_{(m-6)n+p+12j} = 2^n S_{(m-1)n+p} + (-1)^n S_{(m+1)n+p}" },
        WaringForm { set_id: 10, alt: true, w: 2, two_pow: 0, u: 5, step: -10, a: 2, c: 2, b_alt: false, d: -2,
            anchor: "sum_{j=0}^{n/2} (-1)^j n/(n-j) C(n-j,j) 2^j S_{(m+5)n+p-10j} = 2^n S_{(m+2)n+p} + S_{(m-2)n+p}" },
        WaringForm { set_id: 13, alt: false, w: 1, two_pow: 2, u: 2, step: -4, a: 1, c: 7, b_alt: true, d: -7,
            anchor: "sum_{j=0}^{n/2} n/(n-j) C(n-j,j) 2^{2n-4j} S_{(m+2)n+p-4j} = S_{(m+7)n+p} + (-1)^n S_{(m-7)n+p}" },
    ];
    for kind in SEQS {
        for f in &forms {
            let WaringForm { alt, w, two_pow, u, step, a, c, b_alt, d, .. } = *f;
            out.push(entry(
                &format!("waring-set{}-{}", f.set_id, name(kind)),
                &format!("Waring {} sum, set {}", name(kind), f.set_id),
                &lettered(f.anchor, kind),
                &[("m", Integer), ("p", Integer), ("n", Positive)],
                "m=-10..10;p=-8..8;n=1..12",
                iside(move |e, v| {
                    let (m, p, n) = (v[0], v[1], v[2]);
                    (0..=n / 2)
                        .map(|j| {
                            let sg = if alt { sign(j) } else { 1 };
                            waring_coeff(n, j) * sg * ipow(w, j) * ipow(2, two_pow * (n - 2 * j))
                                * e.term(kind, (m + u) * n + p + step * j)
                        })
                        .sum()
                }),
                iside(move |e, v| {
                    let (m, p, n) = (v[0], v[1], v[2]);
                    let bn = if b_alt { sign(n) } else { 1 };
                    ipow(a, n) * e.term(kind, (m + c) * n + p) + e.term(kind, (m + d) * n + p) * bn
                }),
            ));
        }
    }
}

fn double_binomial_products(out: &mut Vec<IdentityDescriptor>) {
    // (id suffix, kind, coefficients indexed by p rather than m)
    let variants = [(1, Seq::P, true), (2, Seq::P, false), (3, Seq::Q, true), (4, Seq::Q, false)];
    for (num, kind, by_p) in variants {
        let anchor = if by_p {
            "sum_{j=0}^n sum_{k=0}^j C(n,j) C(j,k) P_{p-4}^k P_{p-3}^{j-k} P_{p-5}^{n-j} S_{mn+q+k+j} = S_{(m+p)n+q}"
        } else {
            "sum_{j=0}^n sum_{k=0}^j C(n,j) C(j,k) P_{m-4}^k P_{m-3}^{j-k} P_{m-5}^{n-j} S_{pn+q+k+j} = S_{(m+p)n+q}"
        };
        out.push(entry(
            &format!("double-binom-product-{num}"),
            &format!("Double binomial sum of {} numbers", name(kind)),
            &lettered(anchor, kind),
            &[("m", Integer), ("p", Integer), ("q", Integer), ("n", Positive)],
            "m=-8..8;p=-8..8;q=-8..8;n=1..20",
            iside(move |e, v| {
                let (m, p, q, n) = (v[0], v[1], v[2], v[3]);
                let (coef, base) = if by_p { (p, m) } else { (m, p) };
                let a = powers(&e.p(coef - 4), n);
                let b = powers(&e.p(coef - 3), n);
                let c = powers(&e.p(coef - 5), n);
                let mut acc = ExactInt::zero();
                for j in 0..=n {
                    let outer = binomial(n, j) * &c[(n - j) as usize];
                    let mut inner = ExactInt::zero();
                    for k in 0..=j {
                        inner += binomial(j, k) * &a[k as usize] * &b[(j - k) as usize] * e.term(kind, base * n + q + k + j);
                    }
                    acc += outer * inner;
                }
                acc
            }),
            iside(move |e, v| {
                let (m, p, q, n) = (v[0], v[1], v[2], v[3]);
                e.term(kind, (m + p) * n + q)
            }),
        ));
    }
}

/// `Σ_{j≤n/2} Σ_{k=0}^{n−2j} (−1)^{j+k}·κ(n,j)·C(n−2j,k)·term(j,k)` with
/// `κ` the Waring coefficient or its dual.
fn double_waring_sum(n: i64, dual: bool, mut term: impl FnMut(i64, i64) -> ExactInt) -> ExactInt {
    let mut acc = ExactInt::zero();
    for j in 0..=n / 2 {
        let kappa = if dual { dual_coeff(n, j) } else { waring_coeff(n, j) };
        let mut inner = ExactInt::zero();
        for k in 0..=n - 2 * j {
            inner += binomial(n - 2 * j, k) * sign(k) * term(j, k);
        }
        acc += kappa * sign(j) * inner;
    }
    acc
}

/// Summand `Q_{2p}^k P_{q + nm·pn + jm·pj − 2pk}` of the squared-ratio forms.
fn ratio_form_lhs(e: &SeqEngine, p: i64, q: i64, n: i64, dual: bool, nm: i64, jm: i64) -> ExactInt {
    let qp = powers(&e.q(2 * p), n);
    double_waring_sum(n, dual, |j, k| &qp[k as usize] * e.p(q + nm * p * n + jm * p * j - 2 * p * k))
}

/// Determinant right side of the dual forms at `(α/β)^p` and `α^{-2p}`,
/// parameterized by every sign and index that the printed statements vary.
#[derive(Clone, Copy, Debug)]
struct DetForm {
    /// Left-side index `q + nm·pn + jm·pj − 2pk`.
    nm: i64,
    jm: i64,
    /// First column uses `P_{b·pn+q+i}` with `b = base`.
    base: i64,
    /// Row 3 subtracts `P_{row3·pn+q−1}P_{2pn+2p−3}`.
    row3: i64,
    col_sign: i64,
    num_diag: i64,
    den_diag: i64,
    /// Overall factor `(−1)^n`.
    outer: bool,
}

impl DetForm {
    fn lhs(self, e: &SeqEngine, v: &[i64]) -> ExactInt {
        ratio_form_lhs(e, v[0], v[1], v[2], true, self.nm, self.jm)
    }

    fn rhs(self, e: &SeqEngine, v: &[i64]) -> R {
        let (p, q, n) = (v[0], v[1], v[2]);
        let big = 2 * p * n + 2 * p;
        let (r4, r3) = (e.p(big - 4), e.p(big - 3));
        let b = self.base * p * n + q;
        let col = [
            e.p(b + 1) * &r4 - e.p(b) * &r3,
            e.p(b + 2) * &r4 - e.p(b + 1) * &r3,
            e.p(b) * &r4 - e.p(self.row3 * p * n + q - 1) * &r3,
        ]
        .map(|x| x * self.col_sign);
        let value = lemma_ratio(col, &e.p(2 * p - 3), &e.p(2 * p - 4), self.num_diag, self.den_diag, "determinant ratio")?;
        Ok(if self.outer { value * rat_from_int(int(sign(n))) } else { value })
    }
}

type Toggle = (&'static str, fn(&mut DetForm));

/// Every combination of `toggles` applied to `printed`, fewest edits first.
fn toggle_corrections(printed: DetForm, toggles: &[Toggle]) -> Vec<Correction> {
    let k = toggles.len();
    let mut masks: Vec<u32> = (1..(1u32 << k)).collect();
    masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    masks
        .into_iter()
        .map(|mask| {
            let mut form = printed;
            let mut labels = Vec::new();
            for (i, (label, apply)) in toggles.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    apply(&mut form);
                    labels.push(*label);
                }
            }
            Correction {
                label: labels.join("; "),
                edits: mask.count_ones() as usize,
                lhs: Some(iside(move |e, v| form.lhs(e, v))),
                rhs: Some(side(move |e, v| form.rhs(e, v))),
            }
        })
        .collect()
}

fn double_binomial_waring(out: &mut Vec<IdentityDescriptor>) {
    let params = [("p", Integer), ("q", Integer), ("n", Positive)];
    let params_nz = [("p", NonZero), ("q", Integer), ("n", Positive)];
    let grid = "p=-8..8;q=-8..8;n=1..20";
    let grid_nz = format!("p={};q=-8..8;n=1..20", nonzero_list(8));

    out.push(entry(
        "double-binom-waring-1",
        "Double sum from the Waring formula at (alpha^p, beta^p)",
        "sum_{j=0}^{n/2} sum_{k=0}^{n-2j} (-1)^{j+k} n/(n-j) C(n-j,j) C(n-2j,k) Q_p^{n-2j-k} P_{q-pj+pk} = Q_{pn}P_q - P_{pn+q}",
        &params,
        grid,
        iside(|e, v| {
            let (p, q, n) = (v[0], v[1], v[2]);
            let qp = powers(&e.q(p), n);
            double_waring_sum(n, false, |j, k| &qp[(n - 2 * j - k) as usize] * e.p(q - p * j + p * k))
        }),
        iside(|e, v| {
            let (p, q, n) = (v[0], v[1], v[2]);
            e.q(p * n) * e.p(q) - e.p(p * n + q)
        }),
    ));
    out.push(entry(
        "double-binom-waring-2",
        "Double sum from the dual Waring formula at (alpha^p, beta^p)",
        "sum_{j=0}^{n/2} sum_{k=0}^{n-2j} (-1)^{j+k} C(n-j,j) C(n-2j,k) Q_p^{n-2j-k} P_{q-pj+pk} = det[[P_{q+1}P_{pn+p-4}-P_qP_{pn+p-3}, P_{p-4}, 0], [P_{q+2}P_{pn+p-4}-P_{q+1}P_{pn+p-3}, -P_{p-3}, P_{p-4}], [P_qP_{pn+p-4}-P_{q-1}P_{pn+p-3}, 0, -P_{p-3}]] / det[[-P_{p-3}, P_{p-4}, 0], [P_{p-4}, -P_{p-3}, P_{p-4}], [P_{p-4}, 0, -P_{p-3}]]",
        &params_nz,
        &grid_nz,
        iside(|e, v| {
            let (p, q, n) = (v[0], v[1], v[2]);
            let qp = powers(&e.q(p), n);
            double_waring_sum(n, true, |j, k| &qp[(n - 2 * j - k) as usize] * e.p(q - p * j + p * k))
        }),
        side(|e, v| {
            let (p, q, n) = (v[0], v[1], v[2]);
            lemma_ratio(lemma_col(e, p * n + p, q + 4), &e.p(p - 3), &e.p(p - 4), -1, -1, "determinant ratio")
        }),
    ));
    out.push(entry(
        "double-binom-waring-3",
        "Double sum from the Waring formula at ((alpha/beta)^p, (beta/alpha)^p)",
        "sum_{j=0}^{n/2} sum_{k=0}^{n-2j} (-1)^{j+k} n/(n-j) C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+3pn-6pj-2pk} = (-1)^n (Q_{2pn}P_{pn+q} - P_{3pn+q})",
        &params,
        grid,
        iside(|e, v| ratio_form_lhs(e, v[0], v[1], v[2], false, 3, -6)),
        iside(|e, v| {
            let (p, q, n) = (v[0], v[1], v[2]);
            (e.q(2 * p * n) * e.p(p * n + q) - e.p(3 * p * n + q)) * sign(n)
        }),
    ));

    let printed4 = DetForm { nm: 3, jm: -6, base: 1, row3: 1, col_sign: -1, num_diag: 1, den_diag: 1, outer: true };
    let toggles4: [Toggle; 4] = [
        ("negate the first numerator column", |f| f.col_sign = -f.col_sign),
        ("flip the sign of the P_{2p-3} entries in the numerator", |f| f.num_diag = -f.num_diag),
        ("flip the sign of the P_{2p-3} entries in the denominator", |f| f.den_diag = -f.den_diag),
        ("drop the factor (-1)^n", |f| f.outer = !f.outer),
    ];
    out.push(watch(
        entry(
            "double-binom-waring-4",
            "Double sum from the dual Waring formula at ((alpha/beta)^p, (beta/alpha)^p)",
            "sum_{j=0}^{n/2} sum_{k=0}^{n-2j} (-1)^{j+k} C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+3pn-6pj-2pk} = (-1)^n det[[P_{pn+q}P_{2pn+2p-3}-P_{pn+q+1}P_{2pn+2p-4}, P_{2p-4}, 0], [P_{pn+q+1}P_{2pn+2p-3}-P_{pn+q+2}P_{2pn+2p-4}, P_{2p-3}, P_{2p-4}], [P_{pn+q-1}P_{2pn+2p-3}-P_{pn+q}P_{2pn+2p-4}, 0, P_{2p-3}]] / det[[P_{2p-3}, P_{2p-4}, 0], [P_{2p-4}, P_{2p-3}, P_{2p-4}], [P_{2p-4}, 0, P_{2p-3}]]",
            &params_nz,
            &grid_nz,
            iside(move |e, v| printed4.lhs(e, v)),
            side(move |e, v| printed4.rhs(e, v)),
        ),
        toggle_corrections(printed4, &toggles4),
    ));

    let printed5_jm = -8;
    let mut alternatives: Vec<i64> = (-12..=-2).filter(|&c| c != printed5_jm).collect();
    alternatives.sort_by_key(|c| ((c - printed5_jm).abs(), *c));
    let corrections5 = alternatives
        .into_iter()
        .map(|jm| Correction {
            label: format!("use {jm}pj in place of {printed5_jm}pj in the left-side index"),
            edits: 1,
            lhs: Some(iside(move |e, v| ratio_form_lhs(e, v[0], v[1], v[2], false, 4, jm))),
            rhs: None,
        })
        .collect();
    out.push(watch(
        entry(
            "double-binom-waring-5",
            "Double sum from the Waring formula at (alpha^{-2p}, beta^{-2p})",
            "sum_{j=0}^{n/2} sum_{k=0}^{n-2j} (-1)^{j+k} n/(n-j) C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+4pn-8pj-2pk} = (-1)^n (Q_{2pn}P_{2pn+q} - P_{4pn+q})",
            &params,
            grid,
            iside(move |e, v| ratio_form_lhs(e, v[0], v[1], v[2], false, 4, printed5_jm)),
            iside(|e, v| {
                let (p, q, n) = (v[0], v[1], v[2]);
                (e.q(2 * p * n) * e.p(2 * p * n + q) - e.p(4 * p * n + q)) * sign(n)
            }),
        ),
        corrections5,
    ));

    let printed6 = DetForm { nm: 4, jm: -8, base: 2, row3: 1, col_sign: 1, num_diag: 1, den_diag: -1, outer: true };
    let toggles6: [Toggle; 6] = [
        ("use -6pj in place of -8pj in the left-side index", |f| f.jm = -6),
        ("use P_{2pn+q-1} in place of P_{pn+q-1} in row 3", |f| f.row3 = 2),
        ("flip the sign of the P_{2p-3} entries in the numerator", |f| f.num_diag = -f.num_diag),
        ("flip the sign of the P_{2p-3} entries in the denominator", |f| f.den_diag = -f.den_diag),
        ("negate the first numerator column", |f| f.col_sign = -f.col_sign),
        ("drop the factor (-1)^n", |f| f.outer = !f.outer),
    ];
    out.push(watch(
        entry(
            "double-binom-waring-6",
            "Double sum from the dual Waring formula at (alpha^{-2p}, beta^{-2p})",
            "sum_{j=0}^{n/2} sum_{k=0}^{n-2j} (-1)^{j+k} C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+4pn-8pj-2pk} = (-1)^n det[[P_{2pn+q+1}P_{2pn+2p-4}-P_{2pn+q}P_{2pn+2p-3}, P_{2p-4}, 0], [P_{2pn+q+2}P_{2pn+2p-4}-P_{2pn+q+1}P_{2pn+2p-3}, P_{2p-3}, P_{2p-4}], [P_{2pn+q}P_{2pn+2p-4}-P_{pn+q-1}P_{2pn+2p-3}, 0, P_{2p-3}]] / det[[-P_{2p-3}, P_{2p-4}, 0], [P_{2p-4}, -P_{2p-3}, P_{2p-4}], [P_{2p-4}, 0, -P_{2p-3}]]",
            &params_nz,
            &grid_nz,
            iside(move |e, v| printed6.lhs(e, v)),
            side(move |e, v| printed6.rhs(e, v)),
        ),
        toggle_corrections(printed6, &toggles6),
    ));
}

fn lemmas(out: &mut Vec<IdentityDescriptor>) {
    out.push(entry(
        "gamma-component-lemma-1",
        "gamma^2 component of (alpha^r + beta^r) gamma^t",
        "((alpha^r + beta^r) gamma^t)_{gamma^2} = Q_rP_{t-4} - P_{r+t-4}",
        &[("r", Integer), ("t", Integer)],
        "r=-15..15;t=-15..15",
        side(|_, v| Ok(gamma_component_pair(v[0], v[1]))),
        iside(|e, v| {
            let (r, t) = (v[0], v[1]);
            e.q(r) * e.p(t - 4) - e.p(r + t - 4)
        }),
    ));
    out.push(entry(
        "gamma-component-lemma-2",
        "gamma^2 component of gamma^t (alpha^r - beta^r)/(alpha^s - beta^s)",
        "((alpha^r - beta^r)/(alpha^s - beta^s) gamma^t)_{gamma^2} = det[[P_{t-3}P_{r-4}-P_{t-4}P_{r-3}, P_{s-4}, 0], [P_{t-2}P_{r-4}-P_{t-3}P_{r-3}, -P_{s-3}, P_{s-4}], [P_{t-4}P_{r-4}-P_{t-5}P_{r-3}, 0, -P_{s-3}]] / det[[-P_{s-3}, P_{s-4}, 0], [P_{s-4}, -P_{s-3}, P_{s-4}], [P_{s-4}, 0, -P_{s-3}]]",
        &[("r", Integer), ("s", NonZero), ("t", Integer)],
        &format!("r=-15..15;s={};t=-15..15", nonzero_list(15)),
        side(|_, v| gamma_component_ratio(v[0], v[1], v[2]).map_err(|e| Inadmissible(e.to_string()))),
        side(|e, v| {
            let (r, s, t) = (v[0], v[1], v[2]);
            lemma_ratio(lemma_col(e, r, t), &e.p(s - 3), &e.p(s - 4), -1, -1, "determinant ratio")
        }),
    ));
}
