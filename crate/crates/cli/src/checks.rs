//! The named structural checks: hypothesis filter first, then the
//! assertion, with a replayable witness on every failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reed_core::budget::Budget;
use reed_core::buoys;
use reed_core::graph::{Graph, VertexSet};
use reed_core::holes;
use reed_core::invariants::{self, InvariantError, ReedOutcome};
use reed_core::patterns::{self, ClassExpr};
use reed_core::transversal::{self, BoundCheck, TransversalError};
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckId {
    Reed,
    Rabern,
    ChiMonotone,
    KcritHole,
    WhP5,
    Laminar,
    Transversal,
    QuadBound,
    IndepBuoy,
    FullBuoy,
    ChairBullProfile,
    ClassReedC4P5,
    ClassReedP5P5barDart,
    ClassReedP5Kite,
    ClassReedChairBullF,
    Seinsche,
    QuotientC5free,
}

impl CheckId {
    pub fn all() -> &'static [CheckId] {
        use CheckId::*;
        &[
            Reed,
            Rabern,
            ChiMonotone,
            KcritHole,
            WhP5,
            Laminar,
            Transversal,
            QuadBound,
            IndepBuoy,
            FullBuoy,
            ChairBullProfile,
            ClassReedC4P5,
            ClassReedP5P5barDart,
            ClassReedP5Kite,
            ClassReedChairBullF,
            Seinsche,
            QuotientC5free,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        use CheckId::*;
        match self {
            Reed => "reed",
            Rabern => "rabern",
            ChiMonotone => "chi_monotone",
            KcritHole => "kcrit_hole",
            WhP5 => "wh_p5",
            Laminar => "laminar",
            Transversal => "transversal",
            QuadBound => "quad_bound",
            IndepBuoy => "indep_buoy",
            FullBuoy => "full_buoy",
            ChairBullProfile => "chair_bull_profile",
            ClassReedC4P5 => "class_reed_c4p5",
            ClassReedP5P5barDart => "class_reed_p5p5barDart",
            ClassReedP5Kite => "class_reed_p5kite",
            ClassReedChairBullF => "class_reed_chairBullF",
            Seinsche => "seinsche",
            QuotientC5free => "quotient_c5free",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<CheckId, String> {
        CheckId::all()
            .iter()
            .find(|id| id.as_str() == s)
            .copied()
            .ok_or_else(|| format!("unknown check id {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
    NotApplicable,
    BudgetExceeded,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::NotApplicable => "not-applicable",
            Verdict::BudgetExceeded => "budget-exceeded",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        match s {
            "pass" => Some(Verdict::Pass),
            "fail" => Some(Verdict::Fail),
            "vacuous" => Some(Verdict::Vacuous),
            "not-applicable" => Some(Verdict::NotApplicable),
            "budget-exceeded" => Some(Verdict::BudgetExceeded),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: CheckId,
    pub verdict: Verdict,
    /// Small informational fields on pass; deterministic.
    pub detail: Option<Value>,
    /// Replayable witness on fail.
    pub witness: Option<Value>,
}

impl CheckOutcome {
    fn pass(id: CheckId, detail: Value) -> CheckOutcome {
        CheckOutcome {
            id,
            verdict: Verdict::Pass,
            detail: Some(detail),
            witness: None,
        }
    }

    fn plain(id: CheckId, verdict: Verdict) -> CheckOutcome {
        CheckOutcome {
            id,
            verdict,
            detail: None,
            witness: None,
        }
    }

    fn fail(id: CheckId, witness: Value) -> CheckOutcome {
        CheckOutcome {
            id,
            verdict: Verdict::Fail,
            detail: None,
            witness: Some(witness),
        }
    }

    fn not_applicable(id: CheckId, why: &str) -> CheckOutcome {
        CheckOutcome {
            id,
            verdict: Verdict::NotApplicable,
            detail: Some(json!({ "reason": why })),
            witness: None,
        }
    }

    fn budget(id: CheckId, context: String) -> CheckOutcome {
        CheckOutcome {
            id,
            verdict: Verdict::BudgetExceeded,
            detail: Some(json!({ "context": context })),
            witness: None,
        }
    }
}

/// Per-graph context handed to every check.
#[derive(Clone, Copy, Debug)]
pub struct CheckContext {
    pub max_hole_len: usize,
    pub time_budget_ms: Option<u64>,
    pub seed: u64,
    pub input_index: usize,
}

impl CheckContext {
    fn budget(&self) -> Budget {
        Budget::from_config(self.time_budget_ms)
    }

    fn hole_len(&self, g: &Graph) -> usize {
        self.max_hole_len.min(g.n())
    }

    /// Deterministic per-graph RNG, independent of worker scheduling.
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(
            self.seed ^ (self.input_index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        )
    }
}

fn vs_json(s: &VertexSet) -> Value {
    Value::from(s.iter().collect::<Vec<usize>>())
}

fn buoy_json(b: &buoys::Buoy) -> Value {
    Value::from(
        b.sets()
            .iter()
            .map(|s| s.iter().collect::<Vec<usize>>())
            .collect::<Vec<_>>(),
    )
}

pub fn reed_violation_witness(outcome: &ReedOutcome) -> Value {
    let r = outcome.record();
    json!({
        "kind": "reed_violation",
        "omega": r.omega,
        "chi": r.chi,
        "delta": r.delta,
        "reed_bound": r.reed_bound,
    })
}

fn in_class(g: &Graph, names: &[&str]) -> bool {
    let cls = ClassExpr::from_names(names).expect("catalog names are fixed");
    patterns::is_class_member(g, &cls).is_member()
}

fn reed_assertion(id: CheckId, g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    match invariants::satisfies_reed(g, ctx.budget()) {
        Ok(outcome) if outcome.holds() => {
            let r = outcome.record();
            CheckOutcome::pass(
                id,
                json!({ "slack": r.reed_bound - r.chi, "omega": r.omega, "chi": r.chi, "delta": r.delta }),
            )
        }
        Ok(outcome) => CheckOutcome::fail(id, reed_violation_witness(&outcome)),
        Err(e) => budget_or_panic(id, e),
    }
}

fn budget_or_panic(id: CheckId, e: InvariantError) -> CheckOutcome {
    match e {
        InvariantError::Budget(b) => CheckOutcome::budget(id, b.to_string()),
        other => panic!("unexpected invariant error in {id}: {other}"),
    }
}

fn check_reed(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    reed_assertion(CheckId::Reed, g, ctx)
}

fn check_rabern(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::Rabern;
    let complement = g.complement();
    if complement.is_connected().expect("n ≥ 1 enforced upstream") {
        return CheckOutcome::not_applicable(id, "complement is connected");
    }
    reed_assertion(id, g, ctx)
}

fn check_chi_monotone(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::ChiMonotone;
    if g.n() < 2 {
        return CheckOutcome::not_applicable(id, "needs a proper nonempty subset");
    }
    let budget = ctx.budget();
    let g_rec = match invariants::invariant_record(g, budget) {
        Ok(r) => r,
        Err(e) => return budget_or_panic(id, e),
    };
    let g_reed = g_rec.chi <= g_rec.reed_bound;
    let mut rng = ctx.rng();
    let samples = 5usize.min(1 << (g.n() - 1));
    for _ in 0..samples {
        let mut s = VertexSet::empty(g.n());
        loop {
            for v in 0..g.n() {
                if rng.gen_bool(0.5) {
                    s.insert(v);
                }
            }
            if !s.is_empty() && s.len() < g.n() {
                break;
            }
            s = VertexSet::empty(g.n());
        }
        let h = g.induced(&s).expect("sampled subset is in range");
        let h_rec = match invariants::invariant_record(&h, budget) {
            Ok(r) => r,
            Err(e) => return budget_or_panic(id, e),
        };
        let monotone =
            h_rec.omega <= g_rec.omega && h_rec.chi <= g_rec.chi && h_rec.delta <= g_rec.delta;
        // If χ(H) = χ(G) and H satisfies the bound, so must G.
        let transfer = !(h_rec.chi == g_rec.chi && h_rec.chi <= h_rec.reed_bound) || g_reed;
        if !monotone || !transfer {
            return CheckOutcome::fail(
                id,
                json!({
                    "kind": "monotonicity_violation",
                    "subset": vs_json(&s),
                    "h": { "omega": h_rec.omega, "chi": h_rec.chi, "delta": h_rec.delta },
                    "g": { "omega": g_rec.omega, "chi": g_rec.chi, "delta": g_rec.delta },
                }),
            );
        }
    }
    CheckOutcome::pass(id, json!({ "samples": samples }))
}

fn check_kcrit_hole(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::KcritHole;
    let budget = ctx.budget();
    match invariants::is_k_critical(g, budget) {
        Ok(invariants::Criticality::NotCritical { .. }) => {
            CheckOutcome::not_applicable(id, "graph is not k-critical")
        }
        Ok(invariants::Criticality::Critical { .. }) => {
            match invariants::kcritical_odd_hole_check(g, budget) {
                Ok(invariants::KCriticalHoleOutcome::Pass { k, checked }) => {
                    CheckOutcome::pass(id, json!({ "k": k, "vertices_checked": checked }))
                }
                Ok(invariants::KCriticalHoleOutcome::Violation { k, vertex }) => {
                    CheckOutcome::fail(
                        id,
                        json!({
                            "kind": "kcrit_hole_violation",
                            "k": k,
                            "vertex": vertex,
                            "degree": g.degree(vertex),
                        }),
                    )
                }
                Err(e) => budget_or_panic(id, e),
            }
        }
        Err(e) => budget_or_panic(id, e),
    }
}

fn well_hooped_witness(kind: &str, v: &holes::WellHooped) -> Value {
    match v {
        holes::WellHooped::Violation {
            hole,
            vertex,
            positions,
        } => json!({
            "kind": kind,
            "hole": hole.vertices(),
            "vertex": vertex,
            "positions": positions,
        }),
        holes::WellHooped::Yes => unreachable!("witness requested for a pass"),
    }
}

fn check_wh_p5(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::WhP5;
    if !in_class(g, &["P5", "P5bar"]) {
        return CheckOutcome::not_applicable(id, "not (P5,P5bar)-free");
    }
    match holes::is_well_hooped(g, ctx.hole_len(g)) {
        holes::WellHooped::Yes => CheckOutcome::pass(id, json!({})),
        violation => CheckOutcome::fail(id, well_hooped_witness("well_hooped_violation", &violation)),
    }
}

fn check_laminar(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::Laminar;
    if !holes::is_well_hooped(g, ctx.hole_len(g)).is_well_hooped() {
        return CheckOutcome::not_applicable(id, "graph is not well-hooped");
    }
    match buoys::buoy_laminarity_check(g, ctx.hole_len(g)) {
        Ok(buoys::Laminarity::Pass { buoys }) => {
            CheckOutcome::pass(id, json!({ "buoys": buoys.len() }))
        }
        Ok(buoys::Laminarity::Counterexample { first, second }) => CheckOutcome::fail(
            id,
            json!({
                "kind": "laminarity_violation",
                "buoy1": buoy_json(&first),
                "buoy2": buoy_json(&second),
            }),
        ),
        Err(e) => panic!("laminarity on well-hooped graph failed: {e}"),
    }
}

fn check_transversal(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::Transversal;
    if !holes::is_well_hooped(g, ctx.hole_len(g)).is_well_hooped() {
        return CheckOutcome::not_applicable(id, "graph is not well-hooped");
    }
    match transversal::transversal_clique_check(g, ctx.hole_len(g), ctx.budget()) {
        Ok(transversal::TransversalCliqueOutcome::Pass { transversal, omega }) => {
            CheckOutcome::pass(
                id,
                json!({
                    "w": vs_json(&transversal.w),
                    "size": transversal.size,
                    "omega_in_w": transversal.omega_in_w,
                    "omega": omega,
                }),
            )
        }
        Ok(transversal::TransversalCliqueOutcome::Violation { transversal, omega }) => {
            CheckOutcome::fail(
                id,
                json!({
                    "kind": "transversal_violation",
                    "w": vs_json(&transversal.w),
                    "omega_in_w": transversal.omega_in_w,
                    "omega": omega,
                }),
            )
        }
        Err(TransversalError::NoOddHole) => {
            CheckOutcome::not_applicable(id, "graph has no odd hole")
        }
        Err(TransversalError::HoleBeyondMaxLen { found, max_len }) => CheckOutcome::not_applicable(
            id,
            &format!("odd hole of length {found} beyond max_hole_len {max_len}"),
        ),
        Err(TransversalError::Budget(b)) => CheckOutcome::budget(id, b.to_string()),
        Err(TransversalError::Invariant(e)) => budget_or_panic(id, e),
        Err(e) => panic!("unexpected transversal error: {e}"),
    }
}

fn check_quad_bound(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::QuadBound;
    if !in_class(g, &["P6", "P6bar"]) {
        return CheckOutcome::not_applicable(id, "not (P6,P6bar)-free");
    }
    if !holes::is_well_hooped(g, ctx.hole_len(g)).is_well_hooped() {
        return CheckOutcome::not_applicable(id, "graph is not well-hooped");
    }
    match transversal::layered_coloring_bound(g, ctx.hole_len(g), ctx.budget()) {
        Ok(r) => {
            let layers: Vec<Value> = r.layers.iter().map(|t| vs_json(&t.w)).collect();
            let detail = json!({
                "chi": r.chi,
                "omega": r.omega,
                "bound": r.bound,
                "derived_cap": r.derived_cap,
                "stated_cap": r.stated_cap,
                "stated_cap_holds": r.stated_cap_holds,
                "layers": layers,
            });
            if r.derived_holds() {
                CheckOutcome::pass(id, detail)
            } else {
                CheckOutcome::fail(
                    id,
                    json!({
                        "kind": "layered_bound_violation",
                        "chi": r.chi,
                        "omega": r.omega,
                        "bound": r.bound,
                        "derived_cap": r.derived_cap,
                        "layers": layers,
                    }),
                )
            }
        }
        Err(TransversalError::Budget(b)) => CheckOutcome::budget(id, b.to_string()),
        Err(TransversalError::Invariant(e)) => budget_or_panic(id, e),
        Err(e) => panic!("unexpected layered-bound error: {e}"),
    }
}

fn buoy_bound_outcome(
    id: CheckId,
    grade: BoundCheck,
    report: &transversal::BuoyBoundReport,
    witness_kind: &str,
    cap: Option<usize>,
) -> CheckOutcome {
    match grade {
        BoundCheck::Pass => CheckOutcome::pass(
            id,
            json!({ "chi": report.chi, "omega": report.omega, "buoys": report.buoy_count }),
        ),
        BoundCheck::Vacuous => CheckOutcome::plain(id, Verdict::Vacuous),
        BoundCheck::NotApplicable => CheckOutcome::not_applicable(id, "hypotheses do not apply"),
        BoundCheck::Fail => CheckOutcome::fail(
            id,
            json!({
                "kind": witness_kind,
                "chi": report.chi,
                "omega": report.omega,
                "cap": cap,
            }),
        ),
    }
}

fn run_buoy_bounds(g: &Graph, ctx: &CheckContext, want: CheckId) -> CheckOutcome {
    if !holes::is_well_hooped(g, ctx.hole_len(g)).is_well_hooped() {
        return CheckOutcome::not_applicable(want, "graph is not well-hooped");
    }
    match transversal::buoy_class_bound_checks(g, ctx.hole_len(g), ctx.budget()) {
        Ok(report) => match want {
            CheckId::IndepBuoy => buoy_bound_outcome(
                want,
                report.independent_check,
                &report,
                "reed_violation",
                None,
            ),
            CheckId::FullBuoy => {
                let cap = (3 * report.omega + 1) / 2;
                buoy_bound_outcome(want, report.full_check, &report, "full_buoy_violation", Some(cap))
            }
            _ => unreachable!("buoy bounds handle indep/full only"),
        },
        Err(TransversalError::Budget(b)) => CheckOutcome::budget(want, b.to_string()),
        Err(TransversalError::Invariant(e)) => budget_or_panic(want, e),
        Err(e) => panic!("unexpected buoy-bound error: {e}"),
    }
}

fn check_chair_bull_profile(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::ChairBullProfile;
    if !in_class(g, &["Chair", "Bull"]) {
        return CheckOutcome::not_applicable(id, "not (Chair,Bull)-free");
    }
    let mut checked = 0usize;
    for hole in holes::enumerate_odd_holes(g, ctx.hole_len(g)) {
        let partials = holes::partial_vertices(g, &hole).expect("enumerated holes are valid");
        for p in partials.profiles {
            checked += 1;
            let ok = holes::is_three_consecutive(&p.positions, hole.len())
                || (hole.len() == 5 && p.positions.len() == 4);
            if !ok {
                return CheckOutcome::fail(
                    id,
                    json!({
                        "kind": "profile_violation",
                        "hole": hole.vertices(),
                        "vertex": p.vertex,
                        "positions": p.positions,
                    }),
                );
            }
        }
    }
    CheckOutcome::pass(id, json!({ "partial_vertices_checked": checked }))
}

fn check_class_reed(g: &Graph, ctx: &CheckContext, id: CheckId, names: &[&str]) -> CheckOutcome {
    if !in_class(g, names) {
        return CheckOutcome::not_applicable(id, &format!("not ({})-free", names.join(",")));
    }
    reed_assertion(id, g, ctx)
}

fn check_class_reed_chair_bull_f(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::ClassReedChairBullF;
    if !in_class(g, &["Chair", "Bull"]) {
        return CheckOutcome::not_applicable(id, "not (Chair,Bull)-free");
    }
    let family = ["House", "Kite", "Gem", "C5"];
    let absent: Vec<&str> = family
        .iter()
        .copied()
        .filter(|f| in_class(g, &[f]))
        .collect();
    if absent.is_empty() {
        return CheckOutcome::not_applicable(id, "contains every member of {House,Kite,Gem,C5}");
    }
    let mut outcome = reed_assertion(id, g, ctx);
    if let Some(detail) = outcome.detail.as_mut().and_then(Value::as_object_mut) {
        detail.insert("absent_family_members".into(), json!(absent));
    }
    outcome
}

fn check_seinsche(g: &Graph, _ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::Seinsche;
    if g.n() < 2 {
        return CheckOutcome::not_applicable(id, "needs at least two vertices");
    }
    if !in_class(g, &["P4"]) {
        return CheckOutcome::not_applicable(id, "not P4-free");
    }
    // The disconnected-complement conclusion needs a connected graph (a
    // disconnected P4-free graph has a connected complement).
    if !g.is_connected().expect("n ≥ 2") {
        return CheckOutcome::not_applicable(id, "graph is disconnected");
    }
    if g.complement().is_connected().expect("n ≥ 2") {
        CheckOutcome::fail(id, json!({ "kind": "seinsche_violation" }))
    } else {
        CheckOutcome::pass(id, json!({}))
    }
}

fn check_quotient_c5free(g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    let id = CheckId::QuotientC5free;
    if !in_class(g, &["P6"]) {
        return CheckOutcome::not_applicable(id, "not P6-free");
    }
    if !holes::is_well_hooped(g, ctx.hole_len(g)).is_well_hooped() {
        return CheckOutcome::not_applicable(id, "graph is not well-hooped");
    }
    let partition = match buoys::partition_into_buoys(g, ctx.hole_len(g)) {
        Ok(p) => p,
        Err(e) => panic!("partition on well-hooped graph failed: {e}"),
    };
    let shrunk = buoys::shrink(g, &partition);
    match patterns::find_induced(&shrunk.graph, &Graph::cycle(5)) {
        None => CheckOutcome::pass(
            id,
            json!({
                "quotient_n": shrunk.graph.n(),
                "buoys": partition.buoys.len(),
            }),
        ),
        Some(embedding) => CheckOutcome::fail(
            id,
            json!({
                "kind": "quotient_c5_violation",
                "vertex_map": shrunk.vertex_map,
                "embedding": embedding,
            }),
        ),
    }
}

/// Hypothesis filter first; non-matching graphs yield not-applicable,
/// matching graphs pass/fail with a witness, budget exhaustion is its own
/// verdict.
pub fn run_named_check(id: CheckId, g: &Graph, ctx: &CheckContext) -> CheckOutcome {
    use CheckId::*;
    match id {
        Reed => check_reed(g, ctx),
        Rabern => check_rabern(g, ctx),
        ChiMonotone => check_chi_monotone(g, ctx),
        KcritHole => check_kcrit_hole(g, ctx),
        WhP5 => check_wh_p5(g, ctx),
        Laminar => check_laminar(g, ctx),
        Transversal => check_transversal(g, ctx),
        QuadBound => check_quad_bound(g, ctx),
        IndepBuoy => run_buoy_bounds(g, ctx, IndepBuoy),
        FullBuoy => run_buoy_bounds(g, ctx, FullBuoy),
        ChairBullProfile => check_chair_bull_profile(g, ctx),
        ClassReedC4P5 => check_class_reed(g, ctx, ClassReedC4P5, &["C4", "P5"]),
        ClassReedP5P5barDart => {
            check_class_reed(g, ctx, ClassReedP5P5barDart, &["P5", "P5bar", "Dart"])
        }
        ClassReedP5Kite => check_class_reed(g, ctx, ClassReedP5Kite, &["P5", "Kite"]),
        ClassReedChairBullF => check_class_reed_chair_bull_f(g, ctx),
        Seinsche => check_seinsche(g, ctx),
        QuotientC5free => check_quotient_c5free(g, ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> CheckContext {
        CheckContext {
            max_hole_len: 9,
            time_budget_ms: None,
            seed: 7,
            input_index: 0,
        }
    }

    #[test]
    fn reed_passes_on_c5() {
        let out = run_named_check(CheckId::Reed, &Graph::cycle(5), &ctx());
        assert_eq!(out.verdict, Verdict::Pass);
        assert_eq!(out.detail.unwrap()["slack"], 0);
    }

    #[test]
    fn rabern_filter() {
        // A path's complement is connected for n ≥ 4: not applicable.
        let out = run_named_check(CheckId::Rabern, &Graph::path(5), &ctx());
        assert_eq!(out.verdict, Verdict::NotApplicable);
        // K4's complement is edgeless: applies and passes.
        let out = run_named_check(CheckId::Rabern, &Graph::complete(4), &ctx());
        assert_eq!(out.verdict, Verdict::Pass);
    }

    #[test]
    fn wh_p5_on_c5() {
        let out = run_named_check(CheckId::WhP5, &Graph::cycle(5), &ctx());
        assert_eq!(out.verdict, Verdict::Pass);
        // C7 contains P5: not applicable.
        let out = run_named_check(CheckId::WhP5, &Graph::cycle(7), &ctx());
        assert_eq!(out.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn quad_bound_records_stated_discrepancy_on_c5() {
        let out = run_named_check(CheckId::QuadBound, &Graph::cycle(5), &ctx());
        assert_eq!(out.verdict, Verdict::Pass);
        let detail = out.detail.unwrap();
        assert_eq!(detail["stated_cap"], 1);
        assert_eq!(detail["stated_cap_holds"], false);
        assert_eq!(detail["bound"], 3);
    }

    #[test]
    fn transversal_on_expansion() {
        let spec = reed_core::expansion::ExpansionSpec::new(
            Graph::cycle(5),
            vec![Graph::complete(2); 5],
        )
        .unwrap();
        let g = reed_core::expansion::expand(&spec, 64).unwrap().graph;
        let out = run_named_check(CheckId::Transversal, &g, &ctx());
        assert_eq!(out.verdict, Verdict::Pass);
    }

    #[test]
    fn budget_zero_yields_budget_verdict() {
        let ctx = CheckContext {
            time_budget_ms: Some(0),
            ..ctx()
        };
        let out = run_named_check(CheckId::Reed, &Graph::cycle(9), &ctx);
        assert_eq!(out.verdict, Verdict::BudgetExceeded);
    }

    #[test]
    fn seinsche_behaviour() {
        // K3 is P4-free, connected; complement edgeless → disconnected: pass.
        let out = run_named_check(CheckId::Seinsche, &Graph::complete(3), &ctx());
        assert_eq!(out.verdict, Verdict::Pass);
        // P4 itself: not P4-free.
        let out = run_named_check(CheckId::Seinsche, &Graph::path(4), &ctx());
        assert_eq!(out.verdict, Verdict::NotApplicable);
        // Edgeless pair: P4-free but disconnected: filtered out.
        let out = run_named_check(CheckId::Seinsche, &Graph::empty(2), &ctx());
        assert_eq!(out.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn check_id_round_trip() {
        for id in CheckId::all() {
            assert_eq!(CheckId::from_str(id.as_str()).unwrap(), *id);
        }
        assert!(CheckId::from_str("nope").is_err());
    }
}
