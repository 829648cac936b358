use altsieve::blocks::{indecomposables, pim};
use altsieve::repdata::{
    brauer_trees, catalogued, checksum_mismatches, jordan_table, simples, target, torus_trace_rows, ModuleKind,
};
use altsieve::sieve::{brute_force_factor_sets, eigen_consistent, enumerate_factor_sets, satisfies, TraceConstraint};
use altsieve::CompFactorMultiset;
use std::collections::BTreeSet;

#[test]
fn shipped_files_match_checksums() {
    assert!(checksum_mismatches().is_empty(), "{:?}", checksum_mismatches());
}

#[test]
fn catalogues_are_consistent() {
    for (n, p) in catalogued() {
        let cat = simples(n, p).unwrap();
        let labels: BTreeSet<&str> = cat.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels.len(), cat.len(), "Alt({n}) p={p}: duplicate labels");
        assert!(cat.iter().any(|s| s.label == "1" && s.dim == 1 && s.h1_dim == 0));
        for s in cat {
            let d = cat.iter().find(|t| t.label == s.dual_label).unwrap_or_else(|| panic!("{}: dual missing", s.label));
            assert_eq!(d.dual_label, s.label, "Alt({n}) p={p}: dual of dual of {}", s.label);
            assert_eq!(d.dim, s.dim);
            assert!(s.out_orbit.contains(&s.label));
            for o in &s.out_orbit {
                let t = cat.iter().find(|t| &t.label == o).unwrap();
                assert_eq!(t.dim, s.dim);
                assert_eq!(t.h1_dim, s.h1_dim);
            }
        }
    }
}

#[test]
fn trees_are_well_formed() {
    let trees = brauer_trees();
    assert!(!trees.is_empty());
    for (name, t) in &trees {
        t.check().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(t.e() * t.exceptional_multiplicity, t.defect_order - 1, "{name}");
        for l in &t.edges {
            let p = pim(t, l).unwrap();
            assert_eq!(p.dim() % t.defect_order, 0, "{name}: P({l}) has dimension {}", p.dim());
            assert_eq!(p.top(), p.socle(), "{name}: P({l})");
        }
        let ind = indecomposables(t).unwrap();
        assert_eq!(ind.len(), (t.defect_order - 1) * t.e(), "{name}");
        assert!(ind.iter().all(|m| !m.is_projective()));
    }
}

#[test]
fn indecomposables_are_closed_under_duality() {
    for (name, t) in brauer_trees() {
        let mut it = name.split('_');
        let n: usize = it.next().unwrap().parse().unwrap();
        let p: u32 = it.next().unwrap().parse().unwrap();
        let Ok(cat) = simples(n, p) else { continue };
        let dual = |l: &str| cat.iter().find(|s| s.label == l).map(|s| s.dual_label.clone());
        if t.edges.iter().any(|l| dual(l).is_none_or(|d| !t.edges.contains(&d))) {
            continue;
        }
        let ind = indecomposables(&t).unwrap();
        let set: BTreeSet<String> = ind.iter().map(|m| format!("{m:?}")).collect();
        for m in &ind {
            let d = m.dual();
            let relabelled = altsieve::blocks::ModuleShape::new(
                (0..d.layers.len()).map(|i| d.layers[i].map_labels(|l| dual(l).unwrap())).collect(),
            );
            assert!(set.contains(&format!("{relabelled:?}")), "{name}: dual of {m:?} missing");
        }
    }
}

#[test]
fn jordan_tables_fit_the_modules() {
    for (group, key) in [("E6", 5), ("E7", 5), ("E8", 3), ("E8", 4), ("E8", 5)] {
        let table = jordan_table(group, key).unwrap();
        let p = if key == 4 { 2 } else { key };
        let tg = target(group, Some(p)).unwrap();
        assert!(!table.entries.is_empty());
        for e in &table.entries {
            let want = tg.dim(e.module);
            let full = tg.dim(e.module) + 1;
            assert!(
                e.blocks.dim() == want || e.blocks.dim() == full,
                "{group} {key} {} {}: {} blocks of total {}",
                e.class,
                e.module.name(),
                e.blocks.num_blocks(),
                e.blocks.dim()
            );
            assert!(e.blocks.largest() <= key as usize, "{group} {key} {}: block of size {}", e.class, e.blocks.largest());
        }
    }
}

#[test]
fn enumeration_matches_brute_force_and_constraints() {
    for (n, p, group, kind, dim) in [
        (5, 5, "F4", ModuleKind::Vmin, 25),
        (6, 5, "E7", ModuleKind::Vmin, 56),
        (7, 5, "E7", ModuleKind::Vmin, 56),
        (6, 3, "E6", ModuleKind::Vmin, 27),
    ] {
        let cat = simples(n, p).unwrap();
        let tg = target(group, Some(p)).unwrap();
        let c = TraceConstraint::new(n, p, &tg, kind).unwrap();
        let fast = enumerate_factor_sets(cat, dim, &c);
        let slow = brute_force_factor_sets(cat, dim, &c);
        assert_eq!(fast, slow, "Alt({n}) {group} p={p}");
        for m in &fast {
            assert_eq!(m.dim(), dim);
            assert!(satisfies(m, cat, &c).unwrap());
        }
    }
}

#[test]
fn eigenvalue_consistency() {
    let mut tg = target("E7", Some(5)).unwrap();
    for m in [2, 3, 4] {
        tg = tg.with_rows(torus_trace_rows("E7", m).unwrap(), format!("order {m}")).unwrap();
    }
    let cat = simples(6, 5).unwrap();
    let v = CompFactorMultiset::parse("10^4,8^2").unwrap();
    let l = CompFactorMultiset::parse("10^2,5_1^3,5_2^3,8^10,1^3").unwrap();
    assert!(eigen_consistent(6, 5, &tg, cat, &[(ModuleKind::Vmin, &v)]).unwrap());
    assert!(eigen_consistent(6, 5, &tg, cat, &[(ModuleKind::Vmin, &v), (ModuleKind::Lg, &l)]).unwrap());
    // no non-central torus element acts trivially
    let trivial = CompFactorMultiset::parse("1^56").unwrap();
    assert!(!eigen_consistent(6, 5, &tg, cat, &[(ModuleKind::Vmin, &trivial)]).unwrap());
}

#[test]
fn every_recipe_rebuilds_its_simple() {
    for (n, p) in catalogued() {
        let miss = altsieve::repdata::audit(n, p).unwrap();
        assert!(miss.is_empty(), "Alt({n}) p={p}: {miss:?}");
    }
}
