//! Eigenvalue data of torus elements of the exceptional groups, computed
//! from the weights of V_min and L(G). Every semisimple element is conjugate
//! into the maximal torus, so the elements of order m there give all
//! possible eigenvalue patterns of order-m semisimple elements.

use super::{ModuleKind, TraceRow, TraceValue};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashSet};

type Weight = Vec<i32>;

/// Largest m^rank enumerated.
pub const MAX_TORUS_POINTS: u64 = 10_000_000;

/// Cartan matrix with a[i][j] = <α_i^∨, α_j>, Bourbaki numbering.
fn cartan(group: &str) -> Result<Vec<Vec<i32>>> {
    let (r, edges): (usize, &[(usize, usize)]) = match group {
        "E6" | "2E6" => (6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]),
        "E7" => (7, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]),
        "E8" => (8, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]),
        "F4" => (4, &[(1, 2), (2, 3), (3, 4)]),
        _ => return Err(Error::NotCatalogued(format!("root datum of {group}"))),
    };
    let mut a = vec![vec![0; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    if group == "F4" {
        // α2 long, α3 short
        a[2][1] = -2;
    }
    Ok(a)
}

/// Weyl orbit of a dominant weight, in Dynkin-label coordinates.
fn orbit(a: &[Vec<i32>], top: Weight) -> Vec<Weight> {
    let r = a.len();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut stack = vec![top.clone()];
    seen.insert(top);
    while let Some(w) = stack.pop() {
        for j in 0..r {
            if w[j] == 0 {
                continue;
            }
            // s_j(w) = w - w_j α_j, and α_j has labels a[k][j]
            let s: Weight = (0..r).map(|k| w[k] - w[j] * a[k][j]).collect();
            if seen.insert(s.clone()) {
                stack.push(s);
            }
        }
    }
    let mut v: Vec<Weight> = seen.into_iter().collect();
    v.sort();
    v
}

fn fundamental(r: usize, i: usize) -> Weight {
    let mut w = vec![0; r];
    w[i - 1] = 1;
    w
}

/// Weights (with multiplicity) of V_min and L(G).
pub fn weights(group: &str, kind: ModuleKind) -> Result<Vec<Weight>> {
    let a = cartan(group)?;
    let r = a.len();
    let zeros = |k: usize| vec![vec![0; r]; k];
    let group = if group == "2E6" { "E6" } else { group };
    Ok(match (group, kind) {
        ("E6", ModuleKind::Vmin) => orbit(&a, fundamental(r, 1)),
        ("E7", ModuleKind::Vmin) => orbit(&a, fundamental(r, 7)),
        ("F4", ModuleKind::Vmin) => [orbit(&a, fundamental(r, 4)), zeros(2)].concat(),
        // long and short roots
        ("F4", ModuleKind::Lg) => [orbit(&a, fundamental(r, 1)), orbit(&a, fundamental(r, 4)), zeros(r)].concat(),
        (_, _) => {
            let top = match group {
                "E6" => 2,
                "E7" => 1,
                "E8" => 8,
                _ => 1,
            };
            [orbit(&a, fundamental(r, top)), zeros(r)].concat()
        }
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Root-lattice coordinates of weights given in Dynkin labels, for groups
/// whose Cartan matrix has determinant 1 (E8, F4).
fn root_coords(a: &[Vec<i32>], ws: &[Weight]) -> Vec<Vec<i64>> {
    let r = a.len();
    // Gauss-Jordan on [A | I] with A(k, j) = a[k][j], rows kept primitive
    let mut m: Vec<Vec<i64>> = (0..r)
        .map(|k| (0..r).map(|j| a[k][j] as i64).chain((0..r).map(|j| (j == k) as i64)).collect())
        .collect();
    for col in 0..r {
        let piv = (col..r).find(|&i| m[i][col] != 0).expect("singular Cartan matrix");
        m.swap(col, piv);
        for i in 0..r {
            if i == col || m[i][col] == 0 {
                continue;
            }
            let (f, g) = (m[i][col], m[col][col]);
            let pivot_row = m[col].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x = *x * g - y * f;
            }
            let d = m[i].iter().fold(0, |d, &x| gcd(d, x.unsigned_abs())) as i64;
            m[i].iter_mut().for_each(|x| *x /= d);
        }
    }
    let inv: Vec<Vec<i64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let d = row[i];
            row[r..]
                .iter()
                .map(|x| {
                    assert_eq!(x % d, 0, "Cartan matrix not unimodular");
                    x / d
                })
                .collect()
        })
        .collect();
    ws.iter().map(|w| (0..r).map(|k| (0..r).map(|j| inv[k][j] * w[j] as i64).sum()).collect()).collect()
}

/// Distinct (V_min, L(G)) eigenvalue-multiplicity pairs of torus elements of
/// exact order m, central elements excluded.
fn eigen_pairs(group: &str, m: u64, alcove: bool) -> Result<BTreeSet<(Vec<u32>, Vec<u32>)>> {
    let a = cartan(group)?;
    let r = a.len();
    let vmin = weights(group, ModuleKind::Vmin)?;
    let lg = weights(group, ModuleKind::Lg)?;
    let faithful_lg = group == "E8" || group == "F4";
    // on E8 the two modules coincide
    let vmin_ws: &[Weight] = if group == "E8" { &[] } else { &vmin };
    let mu = m as u32;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut hist = vec![0u32; 2 * m as usize];
    let mut visit = |ev: &[u32], el: &[u32]| {
        hist.iter_mut().for_each(|h| *h = 0);
        for &e in ev {
            hist[e as usize] += 1;
        }
        for &e in el {
            hist[(mu + e) as usize] += 1;
        }
        let (hv, hl) = hist.split_at(m as usize);
        let f = if faithful_lg { hl } else { hv };
        // exact order m: the eigenvalue exponents generate Z/m
        let g = f.iter().enumerate().filter(|(_, &k)| k > 0).fold(m, |g, (j, _)| gcd(g, j as u64));
        // central elements cannot lie in a simple subgroup
        if g == 1 && hl[0] as usize != lg.len() && !seen.contains(&hist[..]) {
            seen.insert(hist.clone());
        }
    };
    if alcove {
        // Trivial centre and unimodular Cartan matrix: conjugacy classes of
        // torus elements of order dividing m are the Kac coordinates
        // s_0 + sum a_i s_i = m, where a_i are the highest-root marks and the
        // element is exp(2 pi i sum s_i w_i / m) for fundamental coweights w_i.
        let rv = root_coords(&a, vmin_ws);
        let rl = root_coords(&a, &lg);
        let top = if group == "E8" { fundamental(r, 8) } else { fundamental(r, 1) };
        let marks: Vec<u64> = root_coords(&a, &[top])[0].iter().map(|&x| x as u64).collect();
        let exps = |rc: &[Vec<i64>], s: &[u64]| -> Vec<u32> {
            rc.iter()
                .map(|w| w.iter().zip(s).map(|(&x, &y)| x * y as i64).sum::<i64>().rem_euclid(m as i64) as u32)
                .collect()
        };
        let mut s = vec![0u64; r];
        loop {
            visit(&exps(&rv, &s), &exps(&rl, &s));
            // next s with sum a_i s_i <= m
            let mut i = 0;
            loop {
                if i == r {
                    return Ok(finish(seen, m));
                }
                s[i] += 1;
                if s.iter().zip(&marks).map(|(x, y)| x * y).sum::<u64>() <= m {
                    break;
                }
                s[i] = 0;
                i += 1;
            }
        }
    }
    if m.checked_pow(r as u32).is_none_or(|t| t > MAX_TORUS_POINTS) {
        return Err(Error::Unsupported(format!("torus enumeration of order {m} in {group}")));
    }
    // all of T[m] in coroot coordinates c, element exp(2 pi i sum c_i h_i / m)
    let steps = |ws: &[Weight]| -> Vec<Vec<u32>> {
        (0..r).map(|i| ws.iter().map(|w| (w[i] as i64).rem_euclid(m as i64) as u32).collect()).collect()
    };
    let (sv, sl) = (steps(vmin_ws), steps(&lg));
    let (mut ev, mut el) = (vec![0u32; vmin_ws.len()], vec![0u32; lg.len()]);
    let mut c = vec![0u64; r];
    loop {
        visit(&ev, &el);
        // odometer step; a wrap adds m times a weight, which is 0 mod m
        let mut i = 0;
        while i < r {
            for (e, d) in ev.iter_mut().zip(&sv[i]).chain(el.iter_mut().zip(&sl[i])) {
                *e += d;
                if *e >= mu {
                    *e -= mu;
                }
            }
            c[i] += 1;
            if c[i] < m {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == r {
            return Ok(finish(seen, m));
        }
    }
}

fn finish(seen: HashSet<Vec<u32>>, m: u64) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    seen.into_iter().map(|h| (h[..m as usize].to_vec(), h[m as usize..].to_vec())).collect()
}

/// Eigenvalue-multiplicity rows for all torus elements of exact order m
/// in the simply connected group, one class id per distinct
/// (V_min, L(G)) pair. Central elements are left out. Values are for
/// characteristic 0 dimensions.
pub fn torus_trace_rows(group: &str, m: u64) -> Result<Vec<TraceRow>> {
    if m < 2 {
        return Err(Error::Unsupported(format!("torus elements of order {m}")));
    }
    let alcove = group == "E8" || group == "F4";
    let pairs = eigen_pairs(group, m, alcove)?;
    let mut out = Vec::new();
    for (k, (v, l)) in pairs.into_iter().enumerate() {
        let id = format!("t{k}");
        if group != "E8" {
            out.push(TraceRow { order: m, class_id: id.clone(), kind: ModuleKind::Vmin, value: TraceValue::Eigen(v) });
        }
        out.push(TraceRow { order: m, class_id: id, kind: ModuleKind::Lg, value: TraceValue::Eigen(l) });
    }
    if group == "E8" {
        // V_min = L(G): the pairs collapse
        out.dedup_by(|a, b| a.value == b.value);
        let set: BTreeSet<TraceValue> = out.iter().map(|r| r.value.clone()).collect();
        out = set
            .into_iter()
            .enumerate()
            .map(|(k, value)| TraceRow { order: m, class_id: format!("t{k}"), kind: ModuleKind::Lg, value })
            .collect();
    }
    Ok(out)
}

/// Rows as a trace file.
pub fn trace_file_text(group: &str, rows: &[TraceRow]) -> String {
    let mut s = String::from("group,order,class_id,kind,trace\n");
    for r in rows {
        s.push_str(&format!("{group},{},{},{},\"{}\"\n", r.order, r.class_id, r.kind.name(), r.value));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdata::target;

    #[test]
    fn weight_counts() {
        for (g, v, l) in [("F4", 26, 52), ("E6", 27, 78), ("E7", 56, 133), ("E8", 248, 248)] {
            assert_eq!(weights(g, ModuleKind::Vmin).unwrap().len(), v, "{g}");
            assert_eq!(weights(g, ModuleKind::Lg).unwrap().len(), l, "{g}");
        }
    }

    // the integral traces of orders 2, 3, 5 from the torus must be exactly
    // the shipped table, pairs included
    #[test]
    fn matches_shipped_integral_traces() {
        for g in ["F4", "E6", "E7", "E8"] {
            let shipped = target(g, None).unwrap();
            for m in [2, 3, 5] {
                let rows = torus_trace_rows(g, m).unwrap();
                let ids: BTreeSet<&str> = rows.iter().map(|r| r.class_id.as_str()).collect();
                let mut got: BTreeSet<Vec<i64>> = BTreeSet::new();
                for id in ids {
                    let vals: Vec<Option<i64>> = [ModuleKind::Vmin, ModuleKind::Lg]
                        .iter()
                        .filter(|k| g != "E8" || **k == ModuleKind::Lg)
                        .map(|k| {
                            rows.iter()
                                .find(|r| r.class_id == id && r.kind == *k)
                                .and_then(|r| r.value.to_cyclo(m).as_int())
                        })
                        .collect();
                    if vals.iter().all(|v| v.is_some()) {
                        got.insert(vals.into_iter().map(|v| v.unwrap()).collect());
                    }
                }
                let mut want: BTreeSet<Vec<i64>> = BTreeSet::new();
                for (_, kinds) in shipped.classes(m) {
                    let v: Vec<i64> = kinds
                        .values()
                        .map(|s| s.iter().next().unwrap().to_cyclo(m).as_int().unwrap())
                        .collect();
                    want.insert(v);
                }
                assert_eq!(got, want, "{g} order {m}");
            }
        }
    }

    #[test]
    fn alcove_agrees_with_full_torus() {
        for (g, ms) in [("F4", 2..=7), ("E8", 2..=4)] {
            for m in ms {
                assert_eq!(eigen_pairs(g, m, true).unwrap(), eigen_pairs(g, m, false).unwrap(), "{g} order {m}");
            }
        }
    }
}
