//! One function per subcommand, each returning its experiments.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::str::FromStr;

use idealarith::factorcore::{
    delta_and_rho, elasticity_gap_scan, full_elasticity_construct, recognize_aap, rho_string,
    union_from_sets, Factorizer, FreeAbelian, LengthSet, MonoidOracle, PlaneMonoid, Rho,
};
use idealarith::idealmonoid::identities::recheck_identity;
use idealarith::idealmonoid::{
    certify_atom, check_not_transfer_krull, ideal_elasticity_construct, identity_suite,
    non_ff_witness, not_transfer_krull_witness, recheck_certificate, theorem51_lengths,
    u2_witnesses, AtomStore, IdealFamily, Staircase, StaircaseMonoid, Verdict,
};
use idealarith::polyarith::{Ideal, Rational};
use idealarith::powermonoid::{iso_check, FiniteSet, PowerMonoid, ReducedPowerMonoid};
use idealarith::zerosum::{
    minimal_zero_sum, partition_lengths, realize_length_set_over_z, GroupSpec, RealizeWindow,
    ZeroSumMonoid, ZeroSumSequence,
};
use idealarith::{Caps, Error, Result};
use serde_json::json;

use crate::report::Experiment;
use crate::{properties, Command, RunConfig};

const FACTORIZATION_LIMIT: usize = 10_000;

pub fn dispatch(command: &Command, cfg: &RunConfig) -> Result<Vec<Experiment>> {
    let caps = cfg.caps;
    match command {
        Command::Lengths { monoid, element } => lengths(&monoid.parse()?, element, &caps),
        Command::Atoms { monoid, max } => with_window(&monoid.parse()?, *max, &caps, &AtomsTask),
        Command::Unions { monoid, k, max } => {
            let ks = parse_list::<usize>(k)?;
            with_window(&monoid.parse()?, *max, &caps, &UnionsTask { ks })
        }
        Command::CertifyAtom { ideals } => certify(ideals, &caps),
        Command::VerifyIdentities { max } => identities(*max),
        Command::MaxIdealLengths { k } => max_ideal_lengths(parse_range(k)?, &caps),
        Command::Witnesses { max, alphas } => {
            witnesses(*max, &parse_list::<Rational>(alphas)?, &caps)
        }
        Command::Elastic { q, monoid } => elastic(&parse_list::<Rho>(q)?, monoid, &caps),
        Command::PowermonoidIso { max } => powermonoid(*max, &caps),
        Command::Zerosum {
            group,
            sequence,
            realize,
        } => zerosum(
            &group.parse()?,
            sequence.as_deref(),
            realize.as_deref(),
            &caps,
        ),
        Command::Properties { cases } => Ok(properties::run_all(*cases, cfg.seed)),
        Command::Exemplars { max } => exemplars(*max),
    }
}

/// `2..6`, `2..=6` (both inclusive) or a single number.
pub fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u32>> {
    let bad = || Error::Parse(format!("bad range {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (lo, hi) = (num(a)?, num(b.trim_start_matches('='))?);
            if lo > hi {
                return Err(bad());
            }
            Ok(lo..=hi)
        }
        None => {
            let k = num(s)?;
            Ok(k..=k)
        }
    }
}

pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad list entry {p:?} in {s:?}")))
        })
        .collect()
}

fn parse_set(s: &str) -> Result<LengthSet> {
    let set: FiniteSet = s.parse()?;
    LengthSet::new(set.elements().iter().map(|&x| x as usize))
}

fn parse_tuple(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected a tuple like (3,3), got {s:?}")))?;
    parse_list(inner)
}

/// A monoid named on the command line.
#[derive(Debug, Clone)]
pub enum MonoidLit {
    Plane,
    Free(usize),
    Power,
    ReducedPower,
    ZeroSum(GroupSpec),
    Staircase,
    Ideals,
}

impl FromStr for MonoidLit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        Ok(match (head, arg) {
            ("plane", None) => MonoidLit::Plane,
            ("free", Some(r)) => MonoidLit::Free(r.parse().map_err(|_| Error::Parse(format!("bad rank {r:?}")))?),
            ("power", None) => MonoidLit::Power,
            ("reduced-power", None) => MonoidLit::ReducedPower,
            ("zerosum", Some(g)) => MonoidLit::ZeroSum(g.parse()?),
            ("staircase", None) => MonoidLit::Staircase,
            ("ideals", None) => MonoidLit::Ideals,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown monoid {s:?}; expected plane, free:<rank>, power, reduced-power, zerosum:<group>, staircase or ideals"
                )))
            }
        })
    }
}

fn parse_ideal(s: &str, caps: &Caps) -> Result<Ideal> {
    let ideal = match s.parse::<IdealFamily>() {
        Ok(f) => f.expand(2)?,
        Err(_) => Ideal::parse(s)?,
    };
    Ok(ideal.set_caps(*caps))
}

fn staircase_of(s: &str, caps: &Caps) -> Result<Staircase> {
    Staircase::from_ideal(&parse_ideal(s, caps)?)
}

/// Lengths, distances, elasticity and structure of one element, double-checked
/// against the explicit factorizations.
fn finite_lengths<O: MonoidOracle>(
    oracle: &O,
    a: &O::Element,
    key: String,
    budget: usize,
) -> Result<Experiment> {
    let mut fz = Factorizer::with_budget(oracle, budget);
    let l = fz.length_set(a)?;
    let zs = fz.factorizations(a, FACTORIZATION_LIMIT)?;
    let from_z: BTreeSet<usize> = zs.iter().map(Vec::len).collect();
    let multiply_back = zs.iter().all(|z| fz.multiplies_to(z, a));
    let mut atoms_ok = true;
    for u in zs.iter().flatten() {
        atoms_ok &= fz.is_atom(u)?;
    }
    let (delta, rho) = delta_and_rho(&l);
    let ints: Vec<i64> = l.as_slice().iter().map(|&x| x as i64).collect();
    let aap = recognize_aap(&ints, l.max() as i64);
    let passed =
        from_z.iter().copied().eq(l.as_slice().iter().copied()) && multiply_back && atoms_ok;
    Ok(Experiment::new(
        key,
        passed,
        json!({
            "element": format!("{a:?}"),
            "lengths": l,
            "delta": delta,
            "rho": rho_string(&rho),
            "factorization_count": zs.len(),
            "factorizations": zs.iter().take(50).map(|z| format!("{z:?}")).collect::<Vec<_>>(),
            "aap": aap,
        }),
    )
    .with("L", &l)
    .with("rho", rho_string(&rho))
    .with("factorizations", zs.len())
    .with("aap", aap.is_aap()))
}

fn lengths(monoid: &MonoidLit, element: &str, caps: &Caps) -> Result<Vec<Experiment>> {
    let key = format!("lengths/{element}");
    let budget = caps.search_budget;
    let e = match monoid {
        MonoidLit::Plane => {
            let v = parse_tuple(element)?;
            let [x, y] = v[..] else {
                return Err(Error::Parse("plane elements are pairs".into()));
            };
            finite_lengths(&PlaneMonoid::new(x.max(y)), &(x, y), key, budget)?
        }
        MonoidLit::Free(r) => {
            let v = parse_tuple(element)?;
            let bound = v.iter().copied().max().unwrap_or(0);
            finite_lengths(&FreeAbelian::new(*r, bound), &v, key, budget)?
        }
        MonoidLit::Power => finite_lengths(
            &PowerMonoid::new(caps.max_power_element),
            &element.parse()?,
            key,
            budget,
        )?,
        MonoidLit::ReducedPower => finite_lengths(
            &ReducedPowerMonoid::new(caps.max_power_element),
            &element.parse()?,
            key,
            budget,
        )?,
        MonoidLit::ZeroSum(g) => {
            let s = ZeroSumSequence::parse(g.clone(), element)?;
            let m = ZeroSumMonoid::new(g.clone(), s.support.clone(), caps.max_sequence_len);
            let mut e = finite_lengths(&m, &s.multiplicities, key, budget)?;
            let brute: Vec<usize> = partition_lengths(&s).into_iter().collect();
            let agrees = e.detail["lengths"] == json!(brute);
            e.passed &= agrees;
            e.detail["partition_lengths"] = json!(brute);
            e.with("partition_check", agrees)
        }
        MonoidLit::Staircase => {
            let s = staircase_of(element, caps)?;
            let m = StaircaseMonoid::new(caps.max_degree as u32);
            finite_lengths(&m, &s, key, budget)?.with("note", "lengths within monomial ideals only")
        }
        MonoidLit::Ideals => {
            let fam: IdealFamily = element.parse()?;
            let IdealFamily::A(k) = fam else {
                return Err(Error::InvalidArgument(
                    "lengths over all ideals are certified for a[k] only".into(),
                ));
            };
            return max_ideal_lengths(k..=k, caps).map(|mut v| {
                for e in v.iter_mut().filter(|e| e.key.starts_with("theorem51/")) {
                    e.key = key.clone();
                }
                v
            });
        }
    };
    Ok(vec![e])
}

/// Work that runs over the standard window of a monoid.
trait WindowTask {
    fn run<O: MonoidOracle>(
        &self,
        name: &str,
        oracle: &O,
        universe: Vec<O::Element>,
        budget: usize,
    ) -> Result<Vec<Experiment>>;
}

fn with_window(
    lit: &MonoidLit,
    max: u32,
    caps: &Caps,
    task: &impl WindowTask,
) -> Result<Vec<Experiment>> {
    let budget = caps.search_budget;
    match lit {
        MonoidLit::Plane => task.run(
            "plane",
            &PlaneMonoid::new(max),
            PlaneMonoid::window(max),
            budget,
        ),
        MonoidLit::Free(r) => {
            let m = FreeAbelian::new(*r, max);
            task.run(&format!("free:{r}"), &m, m.window(max), budget)
        }
        MonoidLit::Power => task.run(
            "power",
            &PowerMonoid::new(caps.max_power_element),
            FiniteSet::all_up_to(max, false),
            budget,
        ),
        MonoidLit::ReducedPower => task.run(
            "reduced-power",
            &ReducedPowerMonoid::new(caps.max_power_element),
            FiniteSet::all_up_to(max, true)
                .into_iter()
                .filter(|s| s.elements() != [0])
                .collect(),
            budget,
        ),
        MonoidLit::ZeroSum(g) => {
            let m = ZeroSumMonoid::new(g.clone(), g.nonzero_elements()?, max as usize);
            let w = m.window(max as usize);
            task.run(&format!("zerosum:{g}"), &m, w, budget)
        }
        MonoidLit::Staircase => {
            let top = IdealFamily::A(max).staircase()?.expect("monomial family");
            let w = top.containing_in_box(StaircaseMonoid::new(caps.max_degree as u32).budget)?;
            task.run(
                "staircase",
                &StaircaseMonoid::new(caps.max_degree as u32),
                w,
                budget,
            )
        }
        MonoidLit::Ideals => Err(Error::InvalidArgument(
            "the monoid of all ideals has no finite window; use theorem51 or witnesses".into(),
        )),
    }
}

struct AtomsTask;

impl WindowTask for AtomsTask {
    fn run<O: MonoidOracle>(
        &self,
        name: &str,
        oracle: &O,
        universe: Vec<O::Element>,
        budget: usize,
    ) -> Result<Vec<Experiment>> {
        let mut fz = Factorizer::with_budget(oracle, budget);
        let atoms = fz.atoms_up_to(&universe)?;
        // every non-atom must come with a divisor pair that multiplies back
        let mut consistent = true;
        for a in &universe {
            if oracle.is_identity(a) || atoms.contains(a) {
                continue;
            }
            let pairs = oracle.divisor_pairs(a)?;
            consistent &= pairs
                .first()
                .is_some_and(|(b, c)| oracle.combine(b, c) == *a);
        }
        Ok(vec![Experiment::new(
            format!("atoms/{name}"),
            consistent,
            json!({
                "window_size": universe.len(),
                "atoms": atoms.iter().map(|a| format!("{a:?}")).collect::<Vec<_>>(),
            }),
        )
        .with("window", universe.len())
        .with("atoms", atoms.len())])
    }
}

struct UnionsTask {
    ks: Vec<usize>,
}

impl WindowTask for UnionsTask {
    fn run<O: MonoidOracle>(
        &self,
        name: &str,
        oracle: &O,
        universe: Vec<O::Element>,
        budget: usize,
    ) -> Result<Vec<Experiment>> {
        let mut fz = Factorizer::with_budget(oracle, budget);
        let sets = fz.length_sets_over(&universe)?;
        let window = format!("{name}, {} elements", universe.len());
        let mut out = Vec::new();
        for &k in &self.ks {
            let u = union_from_sets(k, sets.values(), &window);
            // k in U_l iff l in U_k, inside one window
            let symmetric = u
                .lengths
                .iter()
                .all(|&l| union_from_sets(l, sets.values(), &window).contains(k));
            let reflexive = u.lengths.is_empty() || u.contains(k);
            let listed: Vec<String> = u.lengths.iter().map(|x| x.to_string()).collect();
            out.push(
                Experiment::new(
                    format!("unions/{name}/k={k:03}"),
                    symmetric && reflexive,
                    json!({ "union": u, "symmetric": symmetric }),
                )
                .with("U_k", format!("{{{}}}", listed.join(",")))
                .with("window", &window),
            );
        }
        Ok(out)
    }
}

fn certify(args: &[String], caps: &Caps) -> Result<Vec<Experiment>> {
    let mut out = Vec::new();
    for arg in args {
        let ideal = parse_ideal(arg, caps)?;
        let cert = certify_atom(&ideal, caps)?;
        let recheck = recheck_certificate(&ideal, &cert, caps)?;
        let refuted: usize = cert.splits.iter().map(|s| s.refuted).sum();
        let patterns: usize = cert.splits.iter().map(|s| s.patterns).sum();
        let mut e = Experiment::new(
            format!("certify/{arg}"),
            cert.verdict != Verdict::Inconclusive && recheck,
            json!({ "certificate": cert.to_json(), "recheck": recheck }),
        )
        .with("verdict", format!("{:?}", cert.verdict))
        .with("mdeg", cert.mdeg)
        .with("refuted", format!("{refuted}/{patterns}"))
        .with("recheck", recheck);
        if let Some(w) = &cert.witness {
            e = e.with("witness", format!("{} * {}", w.left, w.right));
        }
        out.push(e);
    }
    Ok(out)
}

fn identities(max: u32) -> Result<Vec<Experiment>> {
    let mut out = Vec::new();
    for (i, rec) in identity_suite(max)?.into_iter().enumerate() {
        let recheck = recheck_identity(&rec.transcript)?;
        out.push(
            Experiment::new(
                format!("identity/{i:04}"),
                rec.passed() && recheck == rec.holds,
                serde_json::to_value(&rec).expect("record serializes"),
            )
            .with("identity", &rec.label)
            .with("expected", rec.expected)
            .with("holds", rec.holds),
        );
    }
    Ok(out)
}

fn max_ideal_lengths(ks: std::ops::RangeInclusive<u32>, caps: &Caps) -> Result<Vec<Experiment>> {
    let mut store = AtomStore::new(*caps);
    let mut out = Vec::new();
    for k in ks {
        let cert = theorem51_lengths(k, &mut store)?;
        let mut rechecked = true;
        for f in &cert.factorizations {
            rechecked &= recheck_identity(&f.transcript)?;
        }
        out.push(
            Experiment::new(
                format!("theorem51/k={k:02}"),
                cert.verified() && rechecked,
                serde_json::to_value(&cert).expect("certificate serializes"),
            )
            .with("k", k)
            .with("L", &cert.lengths)
            .with("witnesses", cert.factorizations.len())
            .with("upper_bound", cert.upper_bound.max_length),
        );
    }
    out.extend(atom_experiments(&store));
    Ok(out)
}

/// Every certificate held by the store. A witness verdict is a valid outcome
/// here (the store also records non-atoms); only inconclusive runs fail.
fn atom_experiments(store: &AtomStore) -> Vec<Experiment> {
    store
        .certificates()
        .map(|(f, c)| {
            Experiment::new(
                format!("atom/{f}"),
                c.verdict != Verdict::Inconclusive,
                c.to_json(),
            )
            .with("verdict", format!("{:?}", c.verdict))
        })
        .collect()
}

fn witnesses(max: u32, alphas: &[Rational], caps: &Caps) -> Result<Vec<Experiment>> {
    use IdealFamily::*;
    let mut store = AtomStore::new(*caps);
    let mut out = Vec::new();
    let ntk = not_transfer_krull_witness(&mut store)?;
    out.push(
        Experiment::new("not-transfer-krull/witness", ntk.valid, json!(ntk))
            .with("I", &ntk.i)
            .with("J1", &ntk.j1)
            .with("J2", &ntk.j2),
    );
    let control = check_not_transfer_krull(A(1), B(2), B(2), &mut store)?;
    out.push(
        Experiment::new(
            "not-transfer-krull/negative-control",
            !control.valid,
            json!(control),
        )
        .with("rejected", !control.valid),
    );
    let nff = non_ff_witness(alphas, *caps)?;
    out.push(
        Experiment::new("non-ff", nff.valid, json!(nff))
            .with("alphas", nff.alphas.join(","))
            .with("distinct", nff.pairwise_distinct),
    );
    let mut members = BTreeSet::new();
    for i in 1..=max {
        let w = u2_witnesses(i, &mut store)?;
        let mut rechecked = true;
        for f in &w.factorizations {
            rechecked &= recheck_identity(&f.transcript)?;
        }
        members.extend(w.members.iter().copied());
        let lengths: Vec<String> = w
            .factorizations
            .iter()
            .map(|f| f.lhs.len().to_string())
            .collect();
        out.push(
            Experiment::new(format!("u2/i={i:02}"), w.verified() && rechecked, json!(w))
                .with("element", &w.element)
                .with("lengths", lengths.join(",")),
        );
    }
    let listed: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    out.push(
        Experiment::new(
            "u2/members",
            true,
            json!({ "members": members, "claim": "membership only" }),
        )
        .with("members", format!("{{{}}}", listed.join(","))),
    );
    out.extend(atom_experiments(&store));
    Ok(out)
}

fn elastic(qs: &[Rho], monoid: &str, caps: &Caps) -> Result<Vec<Experiment>> {
    let mut out = Vec::new();
    match monoid {
        "ideals" => {
            let mut store = AtomStore::new(*caps);
            for q in qs {
                let c = ideal_elasticity_construct(*q, &mut store)?;
                out.push(
                    Experiment::new(
                        format!("elastic/ideals/{}", rho_string(q)),
                        c.verified,
                        json!(c),
                    )
                    .with("L", &c.lengths)
                    .with("rho", &c.rho)
                    .with("element", &c.element),
                );
            }
            out.extend(atom_experiments(&store));
        }
        "power" => {
            let m = PowerMonoid::new(caps.max_power_element);
            let mut fz = Factorizer::with_budget(&m, caps.search_budget);
            for q in qs {
                let plan = idealarith::factorcore::ElasticPlan::new(*q)?;
                let witness = FiniteSet::interval(0, plan.witness_max as u32);
                let c = full_elasticity_construct(&mut fz, *q, &FiniteSet::singleton(1), &witness)?;
                let ok = c.verified() && c.computed.rho() == *q;
                out.push(
                    Experiment::new(format!("elastic/power/{}", rho_string(q)), ok, json!(c))
                        .with("L", &c.computed)
                        .with("rho", rho_string(&c.computed.rho()))
                        .with("element", &c.element),
                );
            }
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "elastic supports the monoids ideals and power, not {other:?}"
            )))
        }
    }
    Ok(out)
}

fn powermonoid(max: u32, caps: &Caps) -> Result<Vec<Experiment>> {
    let mut out = Vec::new();
    let iso = iso_check(max);
    out.push(
        Experiment::new("powermonoid/embedding", iso.passed(), json!(iso))
            .with("sets", iso.sets)
            .with("pairs", iso.pairs)
            .with("injective", iso.injective),
    );
    let m = ReducedPowerMonoid::new(caps.max_power_element);
    let mut fz = Factorizer::with_budget(&m, caps.search_budget);
    for n in 2..=max {
        let l = fz.length_set(&FiniteSet::interval(0, n))?;
        out.push(
            Experiment::new(
                format!("powermonoid/interval/n={n:02}"),
                l == LengthSet::interval(2, n as usize),
                json!({ "n": n, "lengths": l }),
            )
            .with("L", &l),
        );
    }
    Ok(out)
}

fn zerosum(
    group: &GroupSpec,
    sequence: Option<&str>,
    realize: Option<&str>,
    caps: &Caps,
) -> Result<Vec<Experiment>> {
    let mut out = Vec::new();
    if let Some(s) = sequence {
        let seq = ZeroSumSequence::parse(group.clone(), s)?;
        if !seq.is_zero_sum() {
            return Err(Error::InvalidArgument(format!(
                "{seq} is not a zero-sum sequence"
            )));
        }
        let m = ZeroSumMonoid::new(group.clone(), seq.support.clone(), caps.max_sequence_len);
        let e = finite_lengths(
            &m,
            &seq.multiplicities,
            format!("zerosum/{group}/{s}"),
            caps.search_budget,
        )?;
        let brute: Vec<usize> = partition_lengths(&seq).into_iter().collect();
        let agrees = e.detail["lengths"] == json!(brute);
        let mut e = e
            .with("minimal", minimal_zero_sum(&seq))
            .with("partition_check", agrees);
        e.passed &= agrees;
        e.detail["sequence"] = seq.to_json();
        out.push(e);
    }
    if let Some(t) = realize {
        let target = parse_set(t)?;
        let found = realize_length_set_over_z(&target, RealizeWindow::default())?;
        let e = match &found {
            Some(s) => Experiment::new(
                format!("zerosum/realize/{target}"),
                true,
                json!({ "target": target, "status": "found", "sequence": s.to_json() }),
            )
            .with("status", "found")
            .with("sequence", s),
            None => Experiment::new(
                format!("zerosum/realize/{target}"),
                true,
                json!({ "target": target, "status": "not_found", "window": RealizeWindow::default() }),
            )
            .with("status", "not found in window"),
        };
        out.push(e);
    }
    if out.is_empty() {
        return Err(Error::InvalidArgument(
            "give a sequence or --realize".into(),
        ));
    }
    Ok(out)
}

fn exemplars(max: u32) -> Result<Vec<Experiment>> {
    let mut out = Vec::new();
    let plane = PlaneMonoid::new(max.max(8));
    let mut fz = Factorizer::new(&plane);
    for m in 2..=max {
        let l = fz.length_set(&(m, m))?;
        out.push(
            Experiment::new(
                format!("plane/diagonal/m={m:02}"),
                l.min() == 2 && l.max() == m as usize,
                json!({ "m": m, "lengths": l }),
            )
            .with("L", &l),
        );
    }
    let scan = elasticity_gap_scan(&mut fz, &PlaneMonoid::window(8))?;
    let rho = scan.min_rho.map(|r| rho_string(&r));
    out.push(
        Experiment::new(
            "plane/gap-scan",
            scan.min_rho.is_some_and(|r| r > Rho::from_integer(1)),
            json!({
                "window": "[1,8]^2",
                "window_size": scan.window_size,
                "min_rho_above_one": rho,
                "witness": scan.witness.map(|w| format!("{w:?}")),
                "witness_lengths": scan.witness_lengths,
            }),
        )
        .with("min_rho", rho.clone().unwrap_or_else(|| "none".into())),
    );
    let c3 = ZeroSumMonoid::new(
        GroupSpec::cyclic(3),
        GroupSpec::cyclic(3).nonzero_elements()?,
        12,
    );
    let mut fz = Factorizer::new(&c3);
    let window = c3.window(12);
    let sets = fz.length_sets_over(&window)?;
    let max_rho = sets
        .values()
        .map(LengthSet::rho)
        .max()
        .expect("nonempty window");
    let all_intervals = sets.values().all(LengthSet::is_interval);
    out.push(
        Experiment::new(
            "zerosum/C3/window",
            all_intervals && max_rho <= Rho::new(3, 2),
            json!({ "window_max_len": 12, "elements": window.len(), "max_rho": rho_string(&max_rho), "all_intervals": all_intervals }),
        )
        .with("max_rho", rho_string(&max_rho))
        .with("intervals", all_intervals),
    );
    Ok(out)
}
