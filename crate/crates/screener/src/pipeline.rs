use crate::config::{CaseConfig, ModuleSel};
use crate::realize::{Layout, Realization, Sweep};
use crate::report::{Candidate, CaseReport, ConfigEcho, Provenance, Shape, Structure, Verdict};
use altsieve::blocks::{can_hide_trivials, HidingVerdict};
use altsieve::groups::alt_group;
use altsieve::jordan::JordanType;
use altsieve::repdata::{
    brauer_trees, fact, jordan_table, load_trace_file, simples, target, torus_trace_rows, BrauerTreeLine,
    JordanTable, ModuleKind, SimpleInfo, TableScope, TargetGroupInfo,
};
use altsieve::sieve::{
    alt5_p2_bound, alt6_p3_four_rule, alt8_p2_no20_check, collapse_out_orbits, consistent_pair,
    eigen_consistent, enumerate_factor_sets, out_image, pressure, pressure_verdict, LineRule, LineVerdict, TraceConstraint,
};
use altsieve::{CompFactorMultiset, Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Distinct elimination reasons quoted per candidate.
const MAX_REASONS: usize = 4;

struct Ctx<'a> {
    cfg: &'a CaseConfig,
    n: usize,
    p: u32,
    catalogue: &'static [SimpleInfo],
    target: TargetGroupInfo,
    trees: Vec<BrauerTreeLine>,
    layout: Option<Layout>,
    table: Option<JordanTable>,
}

/// Screen every candidate for the configured case.
pub fn run_case(cfg: &CaseConfig) -> Result<CaseReport> {
    cfg.validate()?;
    let (n, p) = (cfg.group_n, cfg.p);
    let catalogue = simples(n, p)?;
    let g = alt_group(n)?;
    let p_regular_orders: BTreeSet<u64> =
        g.classes.iter().map(|c| c.order).filter(|&o| o > 1 && o % p as u64 != 0).collect();

    let mut notes = Vec::new();
    let mut tg = target(&cfg.target, Some(p))?;
    if cfg.torus_traces {
        for &m in &p_regular_orders {
            match torus_trace_rows(&cfg.target, m) {
                Ok(rows) => tg = tg.with_rows(rows, format!("torus elements of order {m}"))?,
                Err(Error::Unsupported(_)) => notes.push(format!("order {m}: torus too large to enumerate")),
                Err(e) => return Err(e),
            }
        }
    }
    if let Some(f) = &cfg.trace_file {
        tg = load_trace_file(f, &tg)?;
    }

    let prefix = format!("{n}_{p}_");
    let trees: Vec<BrauerTreeLine> = brauer_trees()
        .into_iter()
        .filter(|(stem, _)| stem.strip_prefix(&prefix).is_some_and(|b| b.parse::<usize>().is_ok()))
        .map(|(_, t)| t)
        .collect();
    let layout = Layout::new(n, p, catalogue)?;
    let table = match jordan_table(&cfg.target, p) {
        Ok(t) => Some(t),
        Err(Error::NotCatalogued(_)) => None,
        Err(e) => return Err(e),
    };

    let mut kinds = cfg.module_kind.kinds();
    if cfg.target == "E8" && cfg.module_kind != ModuleSel::Lg {
        notes.push("E8 has V_min = L(G); screening L(G)".into());
        kinds = vec![ModuleKind::Lg];
    }

    let ctx = Ctx { cfg, n, p, catalogue, target: tg, trees, layout, table };

    // constraints and provenance
    let mut constraints = BTreeMap::new();
    let mut prov = Provenance { trace_sources: ctx.target.trace_sources.clone(), notes, ..Provenance::default() };
    let mut complete = BTreeSet::new();
    let mut seen_orders = BTreeSet::new();
    for kind in [ModuleKind::Vmin, ModuleKind::Lg] {
        if cfg.target == "E8" && kind == ModuleKind::Vmin {
            continue;
        }
        let c = TraceConstraint::new(n, p, &ctx.target, kind)?;
        prov.constrained_orders.insert(kind.name().to_string(), c.orders().into_iter().collect());
        for cc in &c.classes {
            seen_orders.insert(cc.order);
            if cc.complete {
                complete.insert(cc.order);
            }
        }
        constraints.insert(kind, c);
    }
    prov.complete_orders = complete.into_iter().collect();
    prov.missing_orders = p_regular_orders.difference(&seen_orders).copied().collect();
    if !prov.missing_orders.is_empty() {
        prov.notes.push("some element orders are unconstrained, so the candidate list may be larger than necessary".into());
    }
    prov.jordan_table = ctx.table.as_ref().map(|t| {
        let scope = t.entries.first().map_or("empty", |e| match e.scope {
            TableScope::Nongeneric => "non-generic classes",
            TableScope::Complete => "all classes",
            TableScope::Quoted => "quoted classes",
        });
        format!("{} p={} ({scope})", t.group, t.key)
    });
    prov.jordan_sweep = match (&ctx.layout, &ctx.table) {
        (Some(_), _) => format!("u = {}", ctx.p_cycle()),
        (None, _) => format!("not run: the Sylow {p}-subgroup of Alt({n}) is not cyclic of order {p}"),
    };

    // candidates
    let sets = |kind: ModuleKind| {
        let mut sets = enumerate_factor_sets(ctx.catalogue, ctx.target.dim(kind), &constraints[&kind]);
        sets.retain(|m| eigen_consistent(n, p, &ctx.target, ctx.catalogue, &[(kind, m)]).unwrap_or(true));
        if cfg.flags.collapse_out_orbits {
            collapse_out_orbits(sets, ctx.catalogue)
        } else {
            sets
        }
    };
    let mut candidates = Vec::new();
    if kinds.len() == 2 {
        let vs = enumerate_factor_sets(ctx.catalogue, ctx.target.dim_vmin, &constraints[&ModuleKind::Vmin]);
        let ls = enumerate_factor_sets(ctx.catalogue, ctx.target.dim_lg, &constraints[&ModuleKind::Lg]);
        let mut pairs: Vec<(CompFactorMultiset, CompFactorMultiset)> = Vec::new();
        for v in &vs {
            for l in &ls {
                if !ctx.compatible(v, l)? {
                    continue;
                }
                if cfg.flags.collapse_out_orbits {
                    let img = (out_image(v, ctx.catalogue), out_image(l, ctx.catalogue));
                    if pairs.contains(&img) {
                        continue;
                    }
                }
                pairs.push((v.clone(), l.clone()));
            }
        }
        for (v, l) in pairs {
            let verdict = ctx.screen_pair(&v, &l)?;
            candidates.push(Candidate { vmin: Some(v.to_string()), lg: Some(l.to_string()), verdict });
        }
    } else {
        let kind = kinds[0];
        for m in sets(kind) {
            let verdict = ctx.screen_single(kind, &m, &constraints)?;
            let s = Some(m.to_string());
            let (vmin, lg) = if kind == ModuleKind::Vmin { (s, None) } else { (None, s) };
            candidates.push(Candidate { vmin, lg, verdict });
        }
    }

    let mut report = CaseReport {
        config: ConfigEcho {
            group: format!("Alt({n})"),
            cover: cfg.cover.to_string(),
            target: cfg.target.clone(),
            prime: p,
            module: cfg.module_kind.to_string(),
            trace_file: cfg.trace_file.as_ref().map(|f| f.display().to_string()),
            torus_traces: cfg.torus_traces,
            strict_parity: cfg.flags.strict_parity,
            collapse_out_orbits: cfg.flags.collapse_out_orbits,
            seed: cfg.flags.seed,
        },
        provenance: prov,
        candidates,
        ..CaseReport::default()
    };
    report.tally();
    Ok(report)
}

enum Status {
    /// The type cannot occur, with the reason.
    Impossible(String),
    /// The table says nothing about this type.
    Unknown,
    Classes(BTreeSet<String>),
}

impl Ctx<'_> {
    /// Whether the two sets can come from one embedding: paired traces, and
    /// joint eigenvalues of a single semisimple element where known.
    fn compatible(&self, v: &CompFactorMultiset, l: &CompFactorMultiset) -> Result<bool> {
        Ok(consistent_pair(self.n, self.p, &self.target, self.catalogue, v, l)?
            && eigen_consistent(
                self.n,
                self.p,
                &self.target,
                self.catalogue,
                &[(ModuleKind::Vmin, v), (ModuleKind::Lg, l)],
            )?)
    }

    fn p_cycle(&self) -> String {
        let pts: Vec<String> = (1..=self.p).map(|i| i.to_string()).collect();
        format!("({})", pts.join(","))
    }

    fn kind_name(kind: ModuleKind) -> &'static str {
        match kind {
            ModuleKind::Vmin => "V_min",
            ModuleKind::Lg => "L(G)",
        }
    }

    /// First line-fixing rule that applies to one module, with a detail line.
    fn line_rule(&self, kind: ModuleKind, m: &CompFactorMultiset) -> Result<Option<(LineRule, String)>> {
        if let LineVerdict::FixesLine(rule) = pressure_verdict(m, self.catalogue)? {
            let r = pressure(m, self.catalogue)?;
            let detail = format!("H^1 total {} against {} trivial factors", r.h1_total, r.trivial_count);
            return Ok(Some((rule, detail)));
        }
        let t = m.count("1");
        if t > 0 && self.trees.iter().any(|tr| tr.position("1").is_some()) {
            let cert = can_hide_trivials(m, &self.trees)?;
            if cert.verdict == HidingVerdict::MustFixLine {
                let hiders: Vec<String> = cert.consumed.iter().map(|(h, c)| format!("{h} uses {c}")).collect();
                let detail = format!("{t} trivial factors, each needing its own hider: {}", hiders.join(" or "));
                return Ok(Some((LineRule::TooFewHiders { detail }, String::new())));
            }
        }
        let bespoke = match (self.n, self.p) {
            (5, 2) => {
                let group = if self.target.name == "2E6" { "E6" } else { &self.target.name };
                let key = format!("involution_min_unit_blocks_{group}_{}", self.target.effective(kind).name());
                match fact(&key) {
                    Ok(v) => {
                        let a: usize = v.parse().map_err(|_| Error::ParseError { line: 0, msg: key })?;
                        alt5_p2_bound(m, a)?
                    }
                    Err(_) => LineVerdict::Inconclusive,
                }
            }
            (8, 2) if m.count("20") + m.count("20*") == 0 => alt8_p2_no20_check(m)?,
            (6, 3) => alt6_p3_four_rule(m, self.cfg.flags.strict_parity),
            _ => LineVerdict::Inconclusive,
        };
        if let LineVerdict::FixesLine(rule) = bespoke {
            return Ok(Some((rule, String::new())));
        }
        if let Some(lay) = &self.layout {
            let sw = lay.sweep(m, self.self_dual(kind))?;
            if sw.count == 0 && !sw.truncated {
                let detail = "no direct sum of indecomposables avoids a trivial submodule or quotient".to_string();
                return Ok(Some((LineRule::TooFewHiders { detail }, String::new())));
            }
        }
        Ok(None)
    }

    fn fixes(kind: ModuleKind, rule: LineRule, detail: String) -> Verdict {
        Verdict::FixesLine { module: kind.name().to_string(), anchor: rule.anchor().to_string(), rule, detail }
    }

    fn screen_single(
        &self,
        kind: ModuleKind,
        m: &CompFactorMultiset,
        constraints: &BTreeMap<ModuleKind, TraceConstraint>,
    ) -> Result<Verdict> {
        if let Some((rule, detail)) = self.line_rule(kind, m)? {
            return Ok(Self::fixes(kind, rule, detail));
        }
        // cross-check against every compatible set on the other module
        let other = if kind == ModuleKind::Vmin { ModuleKind::Lg } else { ModuleKind::Vmin };
        let mut caveats = Vec::new();
        if let Some(c) = constraints.get(&other) {
            let mut partners = 0;
            let mut first: Option<(LineRule, String)> = None;
            let mut all_fix = true;
            for o in enumerate_factor_sets(self.catalogue, self.target.dim(other), c) {
                let (v, l) = if kind == ModuleKind::Vmin { (m, &o) } else { (&o, m) };
                if !self.compatible(v, l)? {
                    continue;
                }
                partners += 1;
                match self.line_rule(other, &o)? {
                    Some(r) => {
                        first.get_or_insert(r);
                    }
                    None => {
                        all_fix = false;
                        break;
                    }
                }
            }
            match (partners, first) {
                (0, _) => caveats.push(format!("no compatible factor set on {}", Self::kind_name(other))),
                (k, Some((rule, detail))) if all_fix => {
                    let d = format!("every one of the {k} compatible sets on {} fixes a line", Self::kind_name(other));
                    let detail = if detail.is_empty() { d } else { format!("{d}; first: {detail}") };
                    return Ok(Self::fixes(other, rule, detail));
                }
                _ => {}
            }
        }
        self.jordan_single(kind, m, caveats)
    }

    fn screen_pair(&self, v: &CompFactorMultiset, l: &CompFactorMultiset) -> Result<Verdict> {
        for (kind, m) in [(ModuleKind::Vmin, v), (ModuleKind::Lg, l)] {
            if let Some((rule, detail)) = self.line_rule(kind, m)? {
                return Ok(Self::fixes(kind, rule, detail));
            }
        }
        let (lay, table) = match self.sweep_prereqs() {
            Ok(x) => x,
            Err(caveat) => return Ok(Verdict::Survives { structures: vec![], caveats: vec![caveat] }),
        };
        let (sv, sl) = (lay.sweep(v, self.self_dual(ModuleKind::Vmin))?, lay.sweep(l, true)?);
        let mut caveats = truncation_caveats(&[(ModuleKind::Vmin, &sv), (ModuleKind::Lg, &sl)]);
        let mut structures = Vec::new();
        let mut reasons = BTreeSet::new();
        let mut unidentified = false;
        for (tv, rv) in &sv.by_type {
            for (tl, rl) in &sl.by_type {
                match self.pair_status(table, tv, tl) {
                    Ok(classes) => {
                        unidentified |= classes.is_empty();
                        structures.push(Structure {
                            vmin: Some(shape(rv, tv)),
                            lg: Some(shape(rl, tl)),
                            classes: classes.into_iter().collect(),
                        });
                    }
                    Err(why) => {
                        reasons.insert(why);
                    }
                }
            }
        }
        self.finish(structures, reasons, &mut caveats, unidentified, sv.truncated || sl.truncated)
    }

    fn jordan_single(&self, kind: ModuleKind, m: &CompFactorMultiset, mut caveats: Vec<String>) -> Result<Verdict> {
        let (lay, table) = match self.sweep_prereqs() {
            Ok(x) => x,
            Err(c) => {
                caveats.push(c);
                return Ok(Verdict::Survives { structures: vec![], caveats });
            }
        };
        let sw = lay.sweep(m, self.self_dual(kind))?;
        caveats.extend(truncation_caveats(&[(kind, &sw)]));
        let mut structures = Vec::new();
        let mut reasons = BTreeSet::new();
        let mut unidentified = false;
        for (t, r) in &sw.by_type {
            let classes = match self.status(table, kind, t) {
                Status::Impossible(why) => {
                    reasons.insert(why);
                    continue;
                }
                Status::Unknown => {
                    unidentified = true;
                    vec![]
                }
                Status::Classes(c) => c.into_iter().collect(),
            };
            let shape = Some(shape(r, t));
            let (vmin, lg) = if kind == ModuleKind::Vmin { (shape, None) } else { (None, shape) };
            structures.push(Structure { vmin, lg, classes });
        }
        self.finish(structures, reasons, &mut caveats, unidentified, sw.truncated)
    }

    fn finish(
        &self,
        structures: Vec<Structure>,
        reasons: BTreeSet<String>,
        caveats: &mut Vec<String>,
        unidentified: bool,
        truncated: bool,
    ) -> Result<Verdict> {
        if structures.is_empty() && !truncated {
            let mut r: Vec<String> = reasons.into_iter().take(MAX_REASONS + 1).collect();
            if r.len() > MAX_REASONS {
                r.truncate(MAX_REASONS);
                r.push("...".into());
            }
            return Ok(Verdict::EliminatedByJordan { detail: format!("u = {}: {}", self.p_cycle(), r.join("; ")) });
        }
        if unidentified {
            caveats.push("the Jordan table does not identify the unipotent class".into());
        }
        Ok(Verdict::Survives { structures, caveats: std::mem::take(caveats) })
    }

    /// L(G) is always self-dual; V_min is except for E6.
    fn self_dual(&self, kind: ModuleKind) -> bool {
        kind == ModuleKind::Lg || !matches!(self.target.name.as_str(), "E6" | "2E6")
    }

    fn sweep_prereqs(&self) -> std::result::Result<(&Layout, &JordanTable), String> {
        let lay = self.layout.as_ref().ok_or_else(|| {
            format!("Jordan sweep not run: the Sylow {}-subgroup of Alt({}) is not cyclic of order {}", self.p, self.n, self.p)
        })?;
        let table = self
            .table
            .as_ref()
            .ok_or_else(|| format!("no unipotent Jordan table for {}, p = {}", self.target.name, self.p))?;
        Ok((lay, table))
    }

    fn status(&self, table: &JordanTable, kind: ModuleKind, t: &JordanType) -> Status {
        let kind = self.target.effective(kind);
        let rows: Vec<_> = table.entries.iter().filter(|e| e.module == kind).collect();
        if rows.is_empty() {
            return Status::Unknown;
        }
        let classes: BTreeSet<String> = rows.iter().filter(|e| e.blocks == *t).map(|e| e.class.clone()).collect();
        if !classes.is_empty() {
            return Status::Classes(classes);
        }
        match rows[0].scope {
            TableScope::Nongeneric => Status::Impossible(format!(
                "{t} on {} is not the action of a non-generic class of {}",
                Self::kind_name(kind),
                table.group
            )),
            TableScope::Complete => {
                Status::Impossible(format!("{t} on {} is not the action of any class of {}", Self::kind_name(kind), table.group))
            }
            TableScope::Quoted => Status::Unknown,
        }
    }

    /// Classes compatible with both types, or why there are none. An empty
    /// set means neither type identifies a class.
    fn pair_status(
        &self,
        table: &JordanTable,
        tv: &JordanType,
        tl: &JordanType,
    ) -> std::result::Result<BTreeSet<String>, String> {
        let sv = self.status(table, ModuleKind::Vmin, tv);
        let sl = self.status(table, ModuleKind::Lg, tl);
        // an identified class fixes the action on the other module when the
        // table records it
        let check = |classes: &BTreeSet<String>, kind: ModuleKind, t: &JordanType| -> std::result::Result<(), String> {
            for c in classes {
                let listed: Vec<&JordanType> =
                    table.entries.iter().filter(|e| e.module == kind && e.class == *c).map(|e| &e.blocks).collect();
                if listed.is_empty() || listed.contains(&t) {
                    return Ok(());
                }
            }
            let c: Vec<&str> = classes.iter().map(|s| s.as_str()).collect();
            let acts: Vec<String> = table
                .entries
                .iter()
                .filter(|e| e.module == kind && classes.contains(&e.class))
                .map(|e| e.blocks.to_string())
                .collect();
            Err(format!(
                "class {} acts on {} as {}, not {t}",
                c.join(" or "),
                Self::kind_name(kind),
                acts.join(" or ")
            ))
        };
        match (sv, sl) {
            (Status::Impossible(w), _) | (_, Status::Impossible(w)) => Err(w),
            (Status::Classes(a), Status::Classes(b)) => {
                let both: BTreeSet<String> = a.intersection(&b).cloned().collect();
                if both.is_empty() {
                    Err(format!("{tv} on V_min and {tl} on L(G) come from different classes"))
                } else {
                    Ok(both)
                }
            }
            (Status::Classes(a), Status::Unknown) => check(&a, ModuleKind::Lg, tl).map(|_| a),
            (Status::Unknown, Status::Classes(b)) => check(&b, ModuleKind::Vmin, tv).map(|_| b),
            (Status::Unknown, Status::Unknown) => Ok(BTreeSet::new()),
        }
    }
}

fn shape(rs: &[Realization], t: &JordanType) -> Shape {
    Shape {
        module: rs[0].to_string(),
        alternatives: rs[1..].iter().map(|r| r.to_string()).collect(),
        jordan: t.to_string(),
    }
}

fn truncation_caveats(sweeps: &[(ModuleKind, &Sweep)]) -> Vec<String> {
    sweeps
        .iter()
        .filter(|(_, s)| s.truncated)
        .map(|(k, _)| format!("realization search on {} stopped early", k.name()))
        .collect()
}
