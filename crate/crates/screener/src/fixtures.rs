//! The acceptance fixtures: exact reproductions of the printed intermediate
//! computations, one end-to-end screen, and randomized property checks.

use crate::config::{CaseConfig, ModuleSel};
use crate::pipeline::run_case;
use crate::report::Verdict;
use altsieve::blocks::{indecomposables, pim};
use altsieve::exactlinalg::field_make;
use altsieve::gmod::{
    direct_sum, direct_sum_all, dual, ext_square, perm_module, perm_subsets_module, radical_wrt, residual_wrt,
    restrict, socle_series, tensor, GModule,
};
use altsieve::groups::{point_stabilizer_embedding, Perm};
use altsieve::jordan::{class_lookup, jordan_type, JordanType};
use altsieve::meataxe::chop_labels;
use altsieve::repdata::{
    brauer_tree, brauer_trees, catalogued, construction, realize, simple, simples, target, ModuleKind,
};
use altsieve::sieve::{brute_force_factor_sets, enumerate_factor_sets, pressure, TraceConstraint};
use altsieve::{CompFactorMultiset, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    run: fn() -> Result<Check>,
}

/// Whether the computed values matched, and what they were.
pub struct Check {
    pub ok: bool,
    pub detail: String,
}

pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub elapsed: Duration,
    pub limit: Duration,
    pub detail: String,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {}: {} ({:.2?}, limit {:?})",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed,
            self.limit
        )
    }
}

impl Criterion {
    pub fn run(&self) -> Outcome {
        let t = Instant::now();
        let res = (self.run)();
        let elapsed = t.elapsed();
        let (ok, detail) = match res {
            Ok(c) => (c.ok, c.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let detail = if ok && elapsed > self.limit { format!("{detail}; over the time limit") } else { detail };
        Outcome { id: self.id, name: self.name, pass: ok && elapsed <= self.limit, elapsed, limit: self.limit, detail }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "sieve Alt(5) p=5 on F4 V_min", limit: secs(1), run: c1 },
        Criterion { id: 2, name: "sieve Alt(5) p=5 on E8 L(G)", limit: secs(10), run: c2 },
        Criterion { id: 3, name: "pressure Alt(9) p=2", limit: secs(1), run: c3 },
        Criterion { id: 4, name: "exterior squares Alt(9) GF(2)", limit: secs(120), run: c4 },
        Criterion { id: 5, name: "permutation modules GF(2)", limit: secs(5), run: c5 },
        Criterion { id: 6, name: "Brauer tree projectives", limit: secs(1), run: c6 },
        Criterion { id: 7, name: "Jordan type of an explicit Alt(6) module", limit: secs(30), run: c7 },
        Criterion { id: 8, name: "restriction Alt(8) to Alt(7) GF(2)", limit: secs(60), run: c8 },
        Criterion { id: 9, name: "screen Alt(6) in E7, p=5", limit: secs(60), run: c9 },
        Criterion { id: 10, name: "property suites", limit: secs(900), run: c10 },
    ]
}

pub fn run_all() -> Vec<Outcome> {
    criteria().iter().map(Criterion::run).collect()
}

fn ms(s: &str) -> CompFactorMultiset {
    CompFactorMultiset::parse(s).expect("multiset literal")
}

fn list(v: &[CompFactorMultiset]) -> String {
    v.iter().map(|m| format!("{{{m}}}")).collect::<Vec<_>>().join(" ")
}

fn shipped_sets(n: usize, p: u32, group: &str, kind: ModuleKind) -> Result<Vec<CompFactorMultiset>> {
    let t = target(group, Some(p))?;
    let c = TraceConstraint::new(n, p, &t, kind)?;
    Ok(enumerate_factor_sets(simples(n, p)?, t.dim(kind), &c))
}

fn c1() -> Result<Check> {
    let got = shipped_sets(5, 5, "F4", ModuleKind::Vmin)?;
    let want = vec![ms("5^3,3^3,1^2"), ms("5,3^7"), ms("3^6,1^8")];
    let mut g = got.clone();
    let mut w = want.clone();
    g.sort_by_key(|m| m.to_string());
    w.sort_by_key(|m| m.to_string());
    Ok(Check { ok: g == w, detail: list(&got) })
}

fn c2() -> Result<Check> {
    let got = shipped_sets(5, 5, "E8", ModuleKind::Lg)?;
    let ok = got.len() == 7 && got[0] == ms("5^28,3^28,1^24") && got[6] == ms("5,3^55,1^78");
    let detail = format!("{} sets, first {{{}}}, last {{{}}}", got.len(), got[0], got[got.len() - 1]);
    Ok(Check { ok, detail })
}

fn c3() -> Result<Check> {
    let cat = simples(9, 2)?;
    let sets = [
        "26,8_1^8,8_2^8,8_3^8,1^30",
        "26^8,8_1,8_2,8_3,1^16",
        "26^4,20^2,20*^2,8_1^5,8_2^2,1^8",
        "48^2,26^4,8_3^5,1^8",
        "48,26^2,20^2,20*^2,8_1^3,8_2^3,8_3^2,1^4",
    ];
    let got: Vec<i64> = sets.iter().map(|s| pressure(&ms(s), cat).map(|r| r.value)).collect::<Result<_>>()?;
    Ok(Check { ok: got == [-28, 0, 4, 0, 4], detail: format!("{got:?}") })
}

fn c4() -> Result<Check> {
    let (a, b, c) = (realize(9, 2, "8_1")?, realize(9, 2, "8_2")?, realize(9, 2, "8_3")?);
    let x = chop_labels(&ext_square(&direct_sum(&a, &b)?), 0);
    let y = chop_labels(&ext_square(&direct_sum(&a, &c)?), 0);
    let ok = x == ms("48,26^2,8_3^2,1^4") && y == ms("26^2,20,20*,8_1,8_2^2,1^4");
    Ok(Check { ok, detail: format!("{{{x}}} and {{{y}}}") })
}

fn c5() -> Result<Check> {
    let f = field_make(2, 1)?;
    let s10 = socle_series(&perm_module(10, f)?)?;
    let s9 = socle_series(&perm_module(9, f)?)?;
    let ok = s10.to_string() == "1/8/1" && s9.layers.len() == 1 && s9.layers[0] == ms("8_3,1");
    Ok(Check { ok, detail: format!("perm(10) = {s10}, perm(9) = {s9}") })
}

fn c6() -> Result<Check> {
    let mut shapes = Vec::new();
    for (n, p, labels) in [(6, 5, vec!["8"]), (7, 7, vec!["1", "5", "10"]), (8, 5, vec!["13"])] {
        let t = brauer_tree(n, p, "0")?;
        for l in labels {
            shapes.push(pim(&t, l)?.to_string());
        }
    }
    let want = ["8/1,8/8", "1/5/1", "5/1,10/5", "10/5,10/10", "13/1,43/13"];
    let mut counts_ok = true;
    let mut bad = Vec::new();
    for (name, t) in brauer_trees() {
        let k = indecomposables(&t)?.len();
        if k != (t.defect_order - 1) * t.e() {
            counts_ok = false;
            bad.push(format!("{name}: {k}"));
        }
    }
    let ok = shapes == want && counts_ok;
    let detail = format!("{}; indecomposable counts {}", shapes.join(" "), if counts_ok { "ok".into() } else { bad.join(",") });
    Ok(Check { ok, detail })
}

fn c7() -> Result<Check> {
    let g = altsieve::groups::alt_group(6)?;
    let f = field_make(5, 1)?;
    let (ten, a, b, eight) = (realize(6, 5, "10")?, realize(6, 5, "5_1")?, realize(6, 5, "5_2")?, realize(6, 5, "8")?);
    let p8 = construction(6, 5, "P(8)")?;
    let mut parts: Vec<GModule> = vec![ten.clone(), ten];
    parts.extend(std::iter::repeat_n(a, 3));
    parts.extend(std::iter::repeat_n(b, 3));
    parts.extend(std::iter::repeat_n(p8, 3));
    parts.push(eight);
    let m = direct_sum_all(&g, f, &parts)?;
    let u = Perm::from_cycles(6, &[&[1, 2, 3, 4, 5]]);
    let t = jordan_type(&m, &u)?;
    let e7 = class_lookup("E7", 5, &t)?.classes;
    // the E8 types printed for the Alt(6) factor sets all miss the table
    let e8_misses = ["5^46,3^6", "5^47,3^4,1", "5^48,3^2,1^2", "5^49,1^3", "5^49,3"]
        .iter()
        .map(|s| class_lookup("E8", 5, &JordanType::parse(s).unwrap()).map(|r| r.classes.is_empty()))
        .collect::<Result<Vec<bool>>>()?;
    let ok = m.dim() == 133 && t.to_string() == "5^26,3" && e7 == ["A4+A2"] && e8_misses.iter().all(|&b| b);
    let detail = format!("dim {}, u acts as {t}, E7 classes {e7:?}, E8 lookups empty: {e8_misses:?}", m.dim());
    Ok(Check { ok, detail })
}

fn c8() -> Result<Check> {
    let e = point_stabilizer_embedding(8)?;
    let mut ok = true;
    let mut details = Vec::new();
    for s in simples(8, 2)? {
        let r = chop_labels(&restrict(&realize(8, 2, &s.label)?, &e)?, 0);
        if s.label == "64" {
            ok &= r == ms("20,14^3,1^2");
            details.push(format!("64 -> {{{r}}}"));
        } else if r.total() != 1 {
            ok = false;
            details.push(format!("{} -> {{{r}}}", s.label));
        }
    }
    if details.len() == 1 {
        details.push("all others irreducible".into());
    }
    Ok(Check { ok, detail: details.join("; ") })
}

fn c9() -> Result<Check> {
    let r = run_case(&CaseConfig::new(6, "E7", 5, ModuleSel::Both))?;
    let surv: Vec<_> = r.survivors().collect();
    let mut ok = surv.len() == 1;
    let mut detail = format!("{} candidates, {} survive", r.candidates.len(), surv.len());
    if let Some(c) = surv.first() {
        if let Verdict::Survives { structures, .. } = &c.verdict {
            let s: Vec<(String, String)> = structures
                .iter()
                .map(|s| (s.vmin.as_ref().unwrap().module.clone(), s.lg.as_ref().unwrap().module.clone()))
                .collect();
            ok &= s == [("10^4⊕8^2".to_string(), "10^2⊕5_1^3⊕5_2^3⊕P(8)^3⊕8".to_string())];
            detail = format!("{detail}: {s:?}");
        }
    }
    ok &= r.candidates.iter().all(|c| match &c.verdict {
        Verdict::FixesLine { anchor, .. } => !anchor.is_empty(),
        Verdict::EliminatedByJordan { detail } => !detail.is_empty(),
        Verdict::Survives { .. } => true,
    });
    Ok(Check { ok, detail })
}

fn c10() -> Result<Check> {
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, f) in [
        ("exterior square of sums", prop_ext_square as fn() -> Result<(bool, String)>),
        ("radical/residual duality", prop_duality),
        ("sieve vs brute force", prop_sieve),
        ("chop seed independence", prop_chop_seeds),
    ] {
        let (good, d) = f()?;
        ok &= good;
        parts.push(format!("{name}: {d}"));
    }
    Ok(Check { ok, detail: parts.join("; ") })
}

/// Catalogued simples of dimension at most `max` for small groups.
fn small_simples(max: usize) -> Vec<(usize, u32, String)> {
    let mut v = Vec::new();
    for (n, p) in catalogued() {
        if n > 7 {
            continue;
        }
        for s in simples(n, p).unwrap() {
            if s.dim <= max {
                v.push((n, p, s.label.clone()));
            }
        }
    }
    v
}

/// Λ²(A⊕B) and Λ²A ⊕ Λ²B ⊕ A⊗B have the same composition factors.
pub fn prop_ext_square() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pool = small_simples(8);
    let mut bad = 0;
    for _ in 0..50 {
        let (n, p, a) = pool.choose(&mut rng).unwrap().clone();
        let same: Vec<&(usize, u32, String)> = pool.iter().filter(|(m, q, _)| *m == n && *q == p).collect();
        let b = same.choose(&mut rng).unwrap().2.clone();
        let (a, b) = (realize(n, p, &a)?, realize(n, p, &b)?);
        let lhs = chop_labels(&ext_square(&direct_sum(&a, &b)?), 0);
        let rhs = chop_labels(&ext_square(&a), 0)
            .union(&chop_labels(&ext_square(&b), 0))
            .union(&chop_labels(&tensor(&a, &b)?, 0));
        bad += (lhs != rhs) as usize;
    }
    Ok((bad == 0, format!("50 pairs, {bad} mismatches")))
}

fn random_module(rng: &mut ChaCha8Rng) -> Result<(usize, u32, GModule)> {
    let choices = [(5, 2), (5, 3), (5, 5), (6, 2), (6, 3), (6, 5), (7, 2)];
    let &(n, p) = choices.choose(rng).unwrap();
    let f = altsieve::repdata::splitting_field(n, p)?;
    let m = match rng.gen_range(0..3) {
        0 => perm_subsets_module(n, rng.gen_range(1..=2), f)?,
        1 => {
            let cat = simples(n, p)?;
            let s = &cat[rng.gen_range(0..cat.len())];
            let t = &cat[rng.gen_range(0..cat.len())];
            if s.dim * t.dim > 100 {
                perm_module(n, f)?
            } else {
                tensor(&realize(n, p, &s.label)?, &realize(n, p, &t.label)?)?
            }
        }
        _ => tensor(&perm_module(n, f)?, &perm_module(n, f)?)?,
    };
    Ok((n, p, m))
}

/// M / res_I(M) is dual to rad_{I*}(M*), and both have factors in I.
pub fn prop_duality() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    for _ in 0..20 {
        let (n, p, m) = random_module(&mut rng)?;
        let cat = simples(n, p)?;
        let present: Vec<String> = chop_labels(&m, 0).labels().map(|s| s.to_string()).collect();
        let k = rng.gen_range(1..=present.len());
        let mut pick = present.clone();
        pick.shuffle(&mut rng);
        let labels: Vec<&str> = pick[..k].iter().map(|s| s.as_str()).collect();
        let dual_labels: Vec<String> =
            labels.iter().map(|l| simple(n, p, l).map(|s| s.dual_label.clone())).collect::<Result<_>>()?;
        let dual_refs: Vec<&str> = dual_labels.iter().map(|s| s.as_str()).collect();
        let res = residual_wrt(&m, &labels)?;
        let rad = radical_wrt(&dual(&m), &dual_refs)?;
        let quotient = m.dim() - res.dim();
        let rad_factors = chop_labels(&rad, 0);
        let rad_dualized = rad_factors.map_labels(|l| cat.iter().find(|s| s.label == l).map_or(l.to_string(), |s| s.dual_label.clone()));
        let in_i = rad_dualized.labels().all(|l| labels.contains(&l));
        let top = chop_labels(&m, 0);
        let res_f = chop_labels(&res, 0);
        let mut q = top.clone();
        for (l, c) in res_f.iter() {
            q.remove(l, c);
        }
        if quotient != rad.dim() || !in_i || q != rad_dualized {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("20 modules, {bad} mismatches")))
}

/// The pruned enumeration agrees with brute force for every catalogue,
/// target table and total dimension up to 30.
pub fn prop_sieve() -> Result<(bool, String)> {
    let mut runs = 0;
    let mut bad = Vec::new();
    for (n, p) in catalogued() {
        let cat = simples(n, p)?;
        for group in ["F4", "E6", "E7", "E8"] {
            let t = target(group, Some(p))?;
            for kind in [ModuleKind::Vmin, ModuleKind::Lg] {
                let c = TraceConstraint::new(n, p, &t, kind)?;
                for d in 1..=30 {
                    runs += 1;
                    if enumerate_factor_sets(cat, d, &c) != brute_force_factor_sets(cat, d, &c) {
                        bad.push(format!("Alt({n}) p={p} {group} {} dim {d}", kind.name()));
                    }
                }
            }
        }
        for d in 1..=30 {
            runs += 1;
            let none = TraceConstraint::none();
            if enumerate_factor_sets(cat, d, &none) != brute_force_factor_sets(cat, d, &none) {
                bad.push(format!("Alt({n}) p={p} unconstrained dim {d}"));
            }
        }
    }
    let detail = if bad.is_empty() { format!("{runs} instances agree") } else { bad.join(", ") };
    Ok((bad.is_empty(), detail))
}

/// Composition factors do not depend on the MeatAxe seed.
pub fn prop_chop_seeds() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = 0;
    let mut count = 0;
    for _ in 0..10 {
        let (_, _, m) = random_module(&mut rng)?;
        let base = chop_labels(&m, 0);
        for seed in 1..5 {
            count += 1;
            bad += (chop_labels(&m, seed) != base) as usize;
        }
        bad += base.labels().any(|l| l.starts_with('?')) as usize;
    }
    Ok((bad == 0, format!("10 modules x 5 seeds, {bad} mismatches over {count} comparisons")))
}
