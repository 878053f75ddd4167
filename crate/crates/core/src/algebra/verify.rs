//! Machine checks of the defining relations and of the identities built on
//! the shift map, f_k, h_j and positive permutation braids.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::words::{
    a_word, all_permutations, b_word, f_connector, f_word, h_word, perm_braid, spanning_count,
    spanning_family,
};
use super::{AlgebraElement, Engine};
use crate::connector::connector_count;
use crate::diagram::{Slice, SliceKind, SliceWord};
use crate::error::Result;
use crate::ring::RingElem;

pub const DEFAULT_SEED: u64 = 0x5eed_0001;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(n: usize, seed: u64) -> Self {
        Report {
            n,
            seed,
            checks: Vec::new(),
        }
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn ok(&self) -> bool {
        self.failures() == 0
    }

    fn push_eq(&mut self, name: impl Into<String>, lhs: &AlgebraElement, rhs: &AlgebraElement) {
        let passed = lhs == rhs;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: (!passed).then(|| format!("lhs = {lhs}; rhs = {rhs}")),
        });
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: (!passed).then(detail),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

/// A random word of the given length in g_i^{±1} (and e_i if `cups`).
pub fn random_word(rng: &mut impl Rng, n: usize, len: usize, cups: bool) -> SliceWord {
    if n < 2 {
        return SliceWord::empty(n);
    }
    let kinds: &[SliceKind] = if cups {
        &[SliceKind::Pos, SliceKind::Neg, SliceKind::Cup]
    } else {
        &[SliceKind::Pos, SliceKind::Neg]
    };
    let slices = (0..len)
        .map(|_| Slice {
            kind: *kinds.choose(rng).unwrap(),
            at: rng.gen_range(0..n - 1),
        })
        .collect();
    SliceWord::new(n, slices).expect("indices drawn in range")
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A linear combination of products of generator letters.
type Combo = Vec<(RingElem, Vec<Slice>)>;

fn letters(s: &[Slice]) -> Combo {
    vec![(RingElem::one(), s.to_vec())]
}

/// Evaluates a combination both by normalising whole words and by
/// multiplying normalised generators, and checks the two agree.
fn evaluate(eng: &Engine, n: usize, combo: &Combo) -> (AlgebraElement, AlgebraElement) {
    let mut by_word = AlgebraElement::zero(n);
    let mut by_product = AlgebraElement::zero(n);
    for (k, w) in combo {
        let word = SliceWord::new(n, w.clone()).expect("relation indices in range");
        by_word = by_word.add(&eng.normalize(&word).scale(k)).unwrap();
        let gens: Vec<AlgebraElement> = w
            .iter()
            .map(|s| eng.normalize(&SliceWord::new(n, vec![*s]).unwrap()))
            .collect();
        let prod = if gens.is_empty() {
            AlgebraElement::identity(n)
        } else {
            eng.multiply_all(&gens).unwrap()
        };
        by_product = by_product.add(&prod.scale(k)).unwrap();
    }
    (by_word, by_product)
}

fn relation(report: &mut Report, eng: &Engine, n: usize, name: String, lhs: Combo, rhs: Combo) {
    let (lw, lp) = evaluate(eng, n, &lhs);
    let (rw, rp) = evaluate(eng, n, &rhs);
    report.push_eq(format!("{name} [words]"), &lw, &rw);
    report.push_eq(format!("{name} [products]"), &lp, &rp);
}

/// The skein, loop, braid, tangle and curl relations and g_i g_i⁻¹ = 1 for
/// every valid index.
pub fn relation_suite(eng: &Engine, n: usize, seed: u64) -> Report {
    let mut report = Report::new(n, seed);
    let (g, gi, e) = (Slice::pos, Slice::neg, Slice::cup);
    let z = RingElem::z();
    let l = RingElem::lambda();
    let linv = RingElem::lambda_pow(-1);
    for i in 0..n.saturating_sub(1) {
        let k = i + 1;
        relation(
            &mut report,
            eng,
            n,
            format!("skein: g{k} - g{k}^-1 = z(1 - e{k})"),
            vec![
                (RingElem::one(), vec![g(i)]),
                (-RingElem::one(), vec![gi(i)]),
            ],
            vec![(z.clone(), vec![]), (-z.clone(), vec![e(i)])],
        );
        relation(
            &mut report,
            eng,
            n,
            format!("g{k} g{k}^-1 = 1"),
            letters(&[g(i), gi(i)]),
            letters(&[]),
        );
        relation(
            &mut report,
            eng,
            n,
            format!("g{k}^-1 g{k} = 1"),
            letters(&[gi(i), g(i)]),
            letters(&[]),
        );
        relation(
            &mut report,
            eng,
            n,
            format!("loop: e{k}^2 = d e{k}"),
            letters(&[e(i), e(i)]),
            vec![(RingElem::delta(), vec![e(i)])],
        );
        relation(
            &mut report,
            eng,
            n,
            format!("curl: g{k} e{k} = l e{k}"),
            letters(&[g(i), e(i)]),
            vec![(l.clone(), vec![e(i)])],
        );
        relation(
            &mut report,
            eng,
            n,
            format!("curl: e{k} g{k} = l e{k}"),
            letters(&[e(i), g(i)]),
            vec![(l.clone(), vec![e(i)])],
        );
        for j in 0..n - 1 {
            let m = j + 1;
            if i.abs_diff(j) > 1 && i < j {
                relation(
                    &mut report,
                    eng,
                    n,
                    format!("braid: g{k} g{m} = g{m} g{k}"),
                    letters(&[g(i), g(j)]),
                    letters(&[g(j), g(i)]),
                );
            }
            if i.abs_diff(j) != 1 {
                continue;
            }
            if j == i + 1 {
                relation(
                    &mut report,
                    eng,
                    n,
                    format!("braid: g{k} g{m} g{k} = g{m} g{k} g{m}"),
                    letters(&[g(i), g(j), g(i)]),
                    letters(&[g(j), g(i), g(j)]),
                );
            }
            relation(
                &mut report,
                eng,
                n,
                format!("tangle: e{k} e{m} e{k} = e{k}"),
                letters(&[e(i), e(j), e(i)]),
                letters(&[e(i)]),
            );
            relation(
                &mut report,
                eng,
                n,
                format!("tangle: g{k} g{m} e{k} = e{m} e{k}"),
                letters(&[g(i), g(j), e(i)]),
                letters(&[e(j), e(i)]),
            );
            relation(
                &mut report,
                eng,
                n,
                format!("curl: e{k} g{m} e{k} = l^-1 e{k}"),
                letters(&[e(i), g(j), e(i)]),
                vec![(linv.clone(), vec![e(i)])],
            );
        }
    }
    report
}

fn word(n: usize, slices: Vec<Slice>) -> SliceWord {
    SliceWord::new(n, slices).expect("identity indices in range")
}

fn cat(parts: &[&SliceWord]) -> SliceWord {
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        out = out.then(p).expect("same strand count");
    }
    out
}

/// Shift identities, the f_k and h_j identities and the permutation-braid
/// identities. `samples` bounds the number of random words or permutations used
/// per family.
pub fn identity_suite(eng: &Engine, n: usize, seed: u64, samples: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new(n, seed);

    // w a_m = a_m S(w) and w b_m = b_m S(w) for w on m strands
    for m in 1..n {
        let a = a_word(m, m + 1)?;
        let b = b_word(m, m + 1)?;
        for s in 0..samples {
            let len = rng.gen_range(1..=5);
            let w = random_word(&mut rng, m, len, true);
            let wide = w.widen(m + 1)?;
            let shifted = w.shift();
            report.push_eq(
                format!("w a_{m} = a_{m} S(w), m={m}, sample {s}: w = {w}"),
                &eng.normalize(&cat(&[&wide, &a])),
                &eng.normalize(&cat(&[&a, &shifted])),
            );
            report.push_eq(
                format!("w b_{m} = b_{m} S(w), m={m}, sample {s}: w = {w}"),
                &eng.normalize(&cat(&[&wide, &b])),
                &eng.normalize(&cat(&[&b, &shifted])),
            );
        }
    }

    for k in 1..=(n / 2).min(2) {
        let f = f_word(k, n)?;
        let nf = eng.normalize(&f);
        let big_f = AlgebraElement::basis(f_connector(k, n)?);
        let single = nf.len() == 1 && nf.coeff(&f_connector(k, n)?).len() == 1;
        report.push(
            format!("f_{k} is a monomial multiple of F_{k}, n={n}"),
            single,
            || format!("f_{k} = {nf}"),
        );
        report.push_eq(
            format!("alpha(f_{k}) = f_{k}, n={n}"),
            &eng.normalize(&f.alpha()),
            &nf,
        );
        let rho_f = word(
            n,
            f.slices()
                .iter()
                .map(|s| Slice {
                    kind: s.kind,
                    at: 2 * k - 2 - s.at,
                })
                .collect(),
        );
        let n_rho_f = eng.normalize(&rho_f);
        report.push_eq(
            format!("rho_{}(f_{k}) = f_{k}, n={n}", 2 * k),
            &n_rho_f,
            &nf,
        );
        report.push(
            format!("rank f_{k} = n - 2k, n={n}"),
            nf.rank_of() == n - 2 * k,
            || format!("rank {}", nf.rank_of()),
        );

        for i in 1..k {
            let (p, q) = (i - 1, 2 * k - i - 1);
            for (label, kind) in [("g", SliceKind::Pos), ("e", SliceKind::Cup)] {
                let sp = word(n, vec![Slice { kind, at: p }]);
                let sq = word(n, vec![Slice { kind, at: q }]);
                let (gp, gq) = (eng.normalize(&sp), eng.normalize(&sq));
                let tag = format!("{label}{i} vs {label}{}", 2 * k - i);
                // tangle form, via products with the basis element F_k
                report.push_eq(
                    format!("{tag} F_{k} (left), n={n}"),
                    &eng.multiply(&gp, &big_f)?,
                    &eng.multiply(&gq, &big_f)?,
                );
                report.push_eq(
                    format!("F_{k} {tag} (right), n={n}"),
                    &eng.multiply(&big_f, &gp)?,
                    &eng.multiply(&big_f, &gq)?,
                );
                for (which, fw) in [("f", &f), ("rho(f)", &rho_f)] {
                    report.push_eq(
                        format!("{tag} {which}_{k} (left), n={n}"),
                        &eng.normalize(&cat(&[&sp, fw])),
                        &eng.normalize(&cat(&[&sq, fw])),
                    );
                    report.push_eq(
                        format!("{which}_{k} {tag} (right), n={n}"),
                        &eng.normalize(&cat(&[fw, &sp])),
                        &eng.normalize(&cat(&[fw, &sq])),
                    );
                }
            }
        }
    }

    for j in 2..=n.saturating_sub(2) {
        let h = h_word(j, n)?;
        for (label, kind) in [("g", SliceKind::Pos), ("e", SliceKind::Cup)] {
            report.push_eq(
                format!("{label}1 h_{j} = {label}{} h_{j}, n={n}", j + 1),
                &eng.normalize(&cat(&[&word(n, vec![Slice { kind, at: 0 }]), &h])),
                &eng.normalize(&cat(&[&word(n, vec![Slice { kind, at: j }]), &h])),
            );
        }
    }

    let perms: Vec<Vec<usize>> = if n <= 4 {
        all_permutations(n)
    } else {
        (0..samples)
            .map(|_| random_permutation(&mut rng, n))
            .collect()
    };
    for rho in &perms {
        let b_rho = perm_braid(rho)?;
        for i in 0..n.saturating_sub(1) {
            let mut rho1 = rho.clone();
            rho1.swap(i, i + 1);
            let b_rho1 = perm_braid(&rho1)?;
            let gi = word(n, vec![Slice::pos(i)]);
            let (lhs, rhs) = if rho[i] < rho[i + 1] {
                (eng.normalize(&b_rho1), eng.normalize(&cat(&[&gi, &b_rho])))
            } else {
                (eng.normalize(&b_rho), eng.normalize(&cat(&[&gi, &b_rho1])))
            };
            report.push_eq(
                format!("perm braid: b_rho1 = g{} b_rho, rho={rho:?}", i + 1),
                &lhs,
                &rhs,
            );

            if rho[i + 1] == rho[i] + 1 {
                for kind in [SliceKind::Pos, SliceKind::Cup] {
                    let before = word(n, vec![Slice { kind, at: i }]);
                    let after = word(n, vec![Slice { kind, at: rho[i] }]);
                    report.push_eq(
                        format!("perm braid: {before} b_rho = b_rho {after}, rho={rho:?}"),
                        &eng.normalize(&cat(&[&before, &b_rho])),
                        &eng.normalize(&cat(&[&b_rho, &after])),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Relations and identities together.
pub fn verify_suite(eng: &Engine, n: usize, seed: u64, samples: usize) -> Result<Report> {
    let mut report = relation_suite(eng, n, seed);
    report.extend(identity_suite(eng, n, seed, samples)?);
    Ok(report)
}

/// Σ_r |family(n, r)| = dim, and for n ≤ `build_max` the family's leading
/// connectors are pairwise distinct and cover every connector.
pub fn spanning_suite(eng: &Engine, n: usize, build_max: usize) -> Result<Report> {
    let mut report = Report::new(n, 0);
    let total: num_bigint::BigUint = (n % 2..=n)
        .step_by(2)
        .filter_map(|r| spanning_count(n, r))
        .sum();
    let dim = connector_count(n);
    report.push(
        format!("sum of family sizes = dim, n={n}"),
        total == dim,
        || format!("sum {total}, dim {dim}"),
    );
    if n > build_max {
        return Ok(report);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut missing = 0usize;
    let mut repeats = 0usize;
    for r in (n % 2..=n).step_by(2) {
        for w in spanning_family(n, r)? {
            match eng.normalize(&w).leading_connector() {
                Some(c) => {
                    if !seen.insert(c) {
                        repeats += 1;
                    }
                }
                None => missing += 1,
            }
        }
    }
    report.push(
        format!("every family word has one leading connector, n={n}"),
        missing == 0,
        || format!("{missing} words without a single leading connector"),
    );
    report.push(
        format!("leading connectors are distinct, n={n}"),
        repeats == 0,
        || format!("{repeats} repeated leading connectors"),
    );
    report.push(
        format!("leading connectors cover the basis, n={n}"),
        num_bigint::BigUint::from(seen.len()) == dim,
        || format!("{} of {dim} connectors reached", seen.len()),
    );
    Ok(report)
}
