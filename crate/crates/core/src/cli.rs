//! Manifest parsing, report assembly and graph export behind the command-line tool.
//!
//! A manifest is a JSON document with three top-level keys. `groups` maps names
//! to group definitions, `shifts` maps names to window presentations whose
//! generators are tuples of element names, and `tasks` lists operations to run.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blocks::{word_label, BlockGroup, Word};
use crate::decomposition::{decompose, verify_series, DecompositionSeries};
use crate::error::{set_budget, Error};
use crate::finite_group::FiniteGroup;
use crate::group_shift::GroupShift;
use crate::sigma_topology::{
    conjugacy_invariants, default_ell_bound, is_sigma_connected, is_sigma_infinitesimal,
    nilpotency_index, sigma_components,
};
use crate::two_sided::{star, star_series, verify_star_series};

/// Failure classes, each with its own process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Resolve(String),
    Budget(String),
    Verification(String),
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Resolve(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Verification(_) => 5,
            CliError::Other(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Resolve(m) => write!(f, "resolve error: {m}"),
            CliError::Budget(m) => write!(f, "budget exceeded: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Other(m) => write!(f, "error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A group given by a Cayley table over element names, by permutations, or by a standard family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupDef {
    /// `elements` names the rows; `table[i][j]` names the product of elements `i` and `j`.
    Table {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
    },
    /// Permutations of `0..degree` as image lists.
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Cyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Dihedral(usize),
    Quaternion,
    /// Direct product of previously defined groups, by name.
    Product(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftDef {
    pub alphabet: String,
    pub width: usize,
    /// Window generators, each a tuple of `width + 1` element names.
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    pub op: String,
    pub shift: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period_bound: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub groups: BTreeMap<String, GroupDef>,
    #[serde(default)]
    pub shifts: BTreeMap<String, ShiftDef>,
    #[serde(default)]
    pub tasks: Vec<Task>,
}

impl Manifest {
    /// Parses manifest JSON; errors carry line and column.
    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    /// Builds every group, resolving products in dependency order.
    pub fn resolve_groups(&self) -> CliResult<BTreeMap<String, Arc<FiniteGroup>>> {
        let mut done: BTreeMap<String, Arc<FiniteGroup>> = BTreeMap::new();
        let mut pending: Vec<&String> = self.groups.keys().collect();
        while !pending.is_empty() {
            let before = pending.len();
            let mut rest = Vec::new();
            for name in pending {
                match self.build_group(name, &done)? {
                    Some(g) => {
                        done.insert(name.clone(), Arc::new(g));
                    }
                    None => rest.push(name),
                }
            }
            if rest.len() == before {
                return Err(CliError::Resolve(format!(
                    "group products refer to unknown or cyclic definitions: {}",
                    rest.iter()
                        .map(|s| s.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                )));
            }
            pending = rest;
        }
        Ok(done)
    }

    fn build_group(
        &self,
        name: &str,
        done: &BTreeMap<String, Arc<FiniteGroup>>,
    ) -> CliResult<Option<FiniteGroup>> {
        let bad = |e: Error| match e {
            Error::Budget { .. } => CliError::Budget(format!("group {name}: {e}")),
            _ => CliError::Resolve(format!("group {name}: {e}")),
        };
        let g = match &self.groups[name] {
            GroupDef::Table { elements, table } => {
                let pos: BTreeMap<&str, usize> = elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (e.as_str(), i))
                    .collect();
                if pos.len() != elements.len() {
                    return Err(CliError::Resolve(format!(
                        "group {name}: duplicate element names"
                    )));
                }
                let rows = table
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| {
                                pos.get(x.as_str()).copied().ok_or_else(|| {
                                    CliError::Resolve(format!(
                                        "group {name}: unknown element {x:?} in table"
                                    ))
                                })
                            })
                            .collect::<CliResult<Vec<usize>>>()
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                FiniteGroup::from_table(&rows, Some(elements.clone())).map_err(bad)?
            }
            GroupDef::Permutations { degree, generators } => {
                FiniteGroup::from_permutations(*degree, generators).map_err(bad)?
            }
            GroupDef::Cyclic(n) => {
                if *n == 0 {
                    return Err(CliError::Resolve(format!(
                        "group {name}: cyclic order must be positive"
                    )));
                }
                FiniteGroup::cyclic(*n)
            }
            GroupDef::Symmetric(n) => FiniteGroup::symmetric(*n).map_err(bad)?,
            GroupDef::Alternating(n) => FiniteGroup::alternating(*n).map_err(bad)?,
            GroupDef::Dihedral(n) => FiniteGroup::dihedral(*n).map_err(bad)?,
            GroupDef::Quaternion => FiniteGroup::quaternion().map_err(bad)?,
            GroupDef::Product(parts) => {
                if parts.is_empty() {
                    return Err(CliError::Resolve(format!("group {name}: empty product")));
                }
                for p in parts {
                    if !self.groups.contains_key(p) {
                        return Err(CliError::Resolve(format!(
                            "group {name}: unknown factor {p:?}"
                        )));
                    }
                }
                if parts.iter().any(|p| !done.contains_key(p)) {
                    return Ok(None);
                }
                let mut acc = (*done[&parts[0]]).clone();
                for p in &parts[1..] {
                    acc = FiniteGroup::product(&acc, &done[p]).map_err(bad)?;
                }
                acc
            }
        };
        Ok(Some(g))
    }

    /// Builds the named shift.
    pub fn resolve_shift(&self, name: &str) -> CliResult<GroupShift> {
        let groups = self.resolve_groups()?;
        self.resolve_shift_with(name, &groups)
    }

    fn resolve_shift_with(
        &self,
        name: &str,
        groups: &BTreeMap<String, Arc<FiniteGroup>>,
    ) -> CliResult<GroupShift> {
        let def = self
            .shifts
            .get(name)
            .ok_or_else(|| CliError::Resolve(format!("unknown shift {name:?}")))?;
        let alph = groups
            .get(&def.alphabet)
            .ok_or_else(|| {
                CliError::Resolve(format!("shift {name}: unknown alphabet {:?}", def.alphabet))
            })?
            .clone();
        let names = element_names(&alph);
        let index: BTreeMap<&str, u32> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i as u32))
            .collect();
        let mut gens: Vec<Word> = Vec::with_capacity(def.generators.len());
        for (j, tuple) in def.generators.iter().enumerate() {
            if tuple.len() != def.width + 1 {
                return Err(CliError::Resolve(format!(
                    "shift {name}: generator {j} has {} entries, width {} needs {}",
                    tuple.len(),
                    def.width,
                    def.width + 1
                )));
            }
            let word = tuple
                .iter()
                .map(|x| {
                    index.get(x.as_str()).copied().ok_or_else(|| {
                        CliError::Resolve(format!("shift {name}: unknown element {x:?}"))
                    })
                })
                .collect::<CliResult<Word>>()?;
            gens.push(word);
        }
        Ok(GroupShift::from_generators(alph, def.width, &gens)?)
    }

    /// The width a shift was written with, before canonical trimming.
    pub fn declared_width(&self, name: &str) -> CliResult<usize> {
        self.shifts
            .get(name)
            .map(|d| d.width)
            .ok_or_else(|| CliError::Resolve(format!("unknown shift {name:?}")))
    }

    /// Adds a shift over a named alphabet using its canonical window generators.
    pub fn insert_shift(&mut self, name: &str, alphabet_name: &str, shift: &GroupShift) {
        let names = element_names(shift.alphabet());
        let generators = shift
            .window()
            .generators(shift.alphabet())
            .iter()
            .map(|w| w.iter().map(|&x| names[x as usize].clone()).collect())
            .collect();
        self.shifts.insert(
            name.to_string(),
            ShiftDef {
                alphabet: alphabet_name.to_string(),
                width: shift.width(),
                generators,
            },
        );
    }

    /// Adds a group as an explicit table over its element names.
    pub fn insert_group_table(&mut self, name: &str, g: &FiniteGroup) {
        let names = element_names(g);
        let table = g
            .table_rows()
            .iter()
            .map(|row| row.iter().map(|&x| names[x].clone()).collect())
            .collect();
        self.groups.insert(
            name.to_string(),
            GroupDef::Table {
                elements: names,
                table,
            },
        );
    }
}

/// Element labels when they are distinct, otherwise plain indices.
pub fn element_names(g: &FiniteGroup) -> Vec<String> {
    let labels: Vec<String> = (0..g.order() as u32).map(|a| g.label(a)).collect();
    let mut sorted = labels.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() == labels.len() {
        labels
    } else {
        (0..g.order()).map(|i| i.to_string()).collect()
    }
}

/// Serializes a shift together with its alphabet and parses it back.
pub fn round_trip(shift: &GroupShift) -> CliResult<GroupShift> {
    let mut m = Manifest::default();
    m.insert_group_table("alphabet", shift.alphabet());
    m.insert_shift("shift", "alphabet", shift);
    let text = m.to_json();
    Manifest::parse(&text)?.resolve_shift("shift")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyzeReport {
    pub limit_degree: u64,
    pub entropy_log: f64,
    pub minimal_step: usize,
    pub sigma_components: usize,
    pub head_order: usize,
    pub head_sigma_bijective: bool,
    pub is_sigma_connected: bool,
    pub is_sigma_infinitesimal: bool,
    /// Decimal strings, since counts outgrow 64 bits.
    pub periodic_counts: Vec<String>,
}

pub fn cmd_analyze(shift: &GroupShift, period_bound: usize) -> CliResult<AnalyzeReport> {
    let comp = sigma_components(shift)?;
    Ok(AnalyzeReport {
        limit_degree: shift.limit_degree(),
        entropy_log: shift.entropy(),
        minimal_step: shift.minimal_step(),
        sigma_components: comp.count,
        head_order: comp.head.order(),
        head_sigma_bijective: comp.head_sigma.is_bijective(),
        is_sigma_connected: is_sigma_connected(shift)?,
        is_sigma_infinitesimal: is_sigma_infinitesimal(shift),
        periodic_counts: (1..=period_bound)
            .map(|p| shift.periodic_count(p).to_string())
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactorReport {
    pub order: usize,
    pub structure: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateDump {
    pub member: usize,
    pub anticipation: usize,
    pub target: String,
    /// Source blocks, rendered with element names.
    pub blocks: Vec<String>,
    /// Image letter of each block, as an element name of the factor group.
    pub images: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecomposeReport {
    pub head_order: usize,
    pub head_structure: String,
    pub chain_length: usize,
    /// Sorted by order, then by structure tag.
    pub factors: Vec<FactorReport>,
    pub tail_order: usize,
    pub tail_nilpotency: usize,
    pub verified: bool,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<CertificateDump>>,
}

fn factor_reports(groups: impl Iterator<Item = Arc<FiniteGroup>>) -> Vec<FactorReport> {
    let mut v: Vec<FactorReport> = groups
        .map(|g| FactorReport {
            order: g.order(),
            structure: g.structure_tag(),
        })
        .collect();
    v.sort_by(|a, b| (a.order, &a.structure).cmp(&(b.order, &b.structure)));
    v
}

fn dump_certificates(s: &DecompositionSeries) -> Vec<CertificateDump> {
    s.factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let c = &f.certificate;
            let alph = c.source().alphabet();
            CertificateDump {
                member: i + 1,
                anticipation: c.anticipation(),
                target: f.group.structure_tag(),
                blocks: c
                    .domain()
                    .words()
                    .iter()
                    .map(|w| word_label(alph, w))
                    .collect(),
                images: c.rule_table().iter().map(|&x| f.group.label(x)).collect(),
            }
        })
        .collect()
}

pub fn cmd_decompose(
    shift: &GroupShift,
    certificates: bool,
) -> CliResult<(DecomposeReport, DecompositionSeries)> {
    let s = decompose(shift)?;
    let verdict = verify_series(shift, &s)?;
    let report = DecomposeReport {
        head_order: s.head.order(),
        head_structure: s.head.structure_tag(),
        chain_length: s.len(),
        factors: factor_reports(s.factors.iter().map(|f| f.group.clone())),
        tail_order: s.tail().point_count().expect("tails are finite"),
        tail_nilpotency: s.tail_nilpotency,
        verified: verdict.passed(),
        failures: verdict.failures,
        certificates: certificates.then(|| dump_certificates(&s)),
    };
    Ok((report, s))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantsReport {
    pub d: u64,
    pub fixed_alphabet_check: bool,
    pub f: Vec<Option<u64>>,
    pub cycle_counts: Vec<Option<i64>>,
    pub consistent: bool,
    pub ell: Option<usize>,
    pub ell_bound: usize,
    pub periodic_counts: Vec<String>,
}

pub fn cmd_invariants(shift: &GroupShift, period_bound: usize) -> CliResult<InvariantsReport> {
    let inv = conjugacy_invariants(shift, period_bound, default_ell_bound(shift))?;
    Ok(InvariantsReport {
        d: inv.d,
        fixed_alphabet_check: inv.fixed_alphabet_check,
        f: inv.f,
        cycle_counts: inv.cycle_counts,
        consistent: inv.consistent,
        ell: inv.ell,
        ell_bound: inv.ell_bound,
        periodic_counts: inv.periodic_counts.iter().map(|c| c.to_string()).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StarReport {
    pub limit_degree: u64,
    pub width: usize,
    pub states: usize,
    pub is_trivial: bool,
    pub periodic_counts: Vec<String>,
    pub head_order: usize,
    pub chain_length: usize,
    pub factors: Vec<FactorReport>,
    pub verified: bool,
    pub failures: Vec<String>,
}

pub fn cmd_star(shift: &GroupShift, period_bound: usize) -> CliResult<StarReport> {
    let st = star(shift);
    let s = decompose(shift)?;
    let series = star_series(shift, &s)?;
    let failures = verify_star_series(&series)?;
    Ok(StarReport {
        limit_degree: st.limit_degree(),
        width: st.width(),
        states: st.state_count(),
        is_trivial: st.is_trivial(),
        periodic_counts: (1..=period_bound)
            .map(|p| st.periodic_count(p).to_string())
            .collect(),
        head_order: series.head.order(),
        chain_length: series.len(),
        factors: factor_reports(series.factors.iter().map(|f| f.group.clone())),
        verified: failures.is_empty(),
        failures,
    })
}

/// DOT export of the state graph at presentation width `max(width, w)`.
///
/// States are the extendable blocks of length `width` and edges the
/// extendable blocks of length `width + 1`, read one-sided or two-sided.
/// Width 0 gives a single state with one loop per letter. The identity
/// state is highlighted.
pub fn cmd_dot(shift: &GroupShift, width: usize, two_sided: bool) -> CliResult<String> {
    let alph = shift.alphabet().clone();
    let w = width.max(shift.width());
    let two = two_sided.then(|| star(shift));
    let blocks = |i: usize| -> CliResult<BlockGroup> {
        Ok(match &two {
            Some(t) => t.blocks(i)?,
            None => shift.blocks(i)?,
        })
    };
    let edges = blocks(w)?;
    let mut states: Vec<Word> = if w == 0 {
        vec![Vec::new()]
    } else {
        blocks(w - 1)?.words().to_vec()
    };
    states.sort_unstable();
    let state_of = |word: &[u32]| {
        states
            .binary_search_by(|s| s.as_slice().cmp(word))
            .expect("edge ends are states")
    };
    let identity = state_of(&vec![0; w]);
    let mut out = String::from("digraph shift {\n  rankdir=LR;\n");
    for (i, st) in states.iter().enumerate() {
        let label = if st.is_empty() {
            "·".to_string()
        } else {
            word_label(&alph, st)
        };
        let style = if i == identity {
            ", style=filled, fillcolor=lightblue"
        } else {
            ""
        };
        writeln!(out, "  s{i} [label={label:?}{style}];").expect("string write");
    }
    for e in edges.words() {
        let (from, to) = (state_of(&e[..w]), state_of(&e[1..]));
        let letter = alph.label(*e.last().expect("nonempty edge"));
        writeln!(out, "  s{from} -> s{to} [label={letter:?}];").expect("string write");
    }
    out.push_str("}\n");
    Ok(out)
}

/// One finished task, rendered both ways.
#[derive(Clone, Debug)]
pub struct TaskOutput {
    pub op: String,
    pub shift: String,
    pub json: serde_json::Value,
    pub text: String,
    pub verified: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub period_bound: usize,
    pub budget: usize,
    pub certificates: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            period_bound: 8,
            budget: crate::error::DEFAULT_BUDGET,
            certificates: false,
        }
    }
}

/// Runs one operation on one named shift.
pub fn run_task(
    manifest: &Manifest,
    op: &str,
    shift_name: &str,
    opts: RunOptions,
) -> CliResult<TaskOutput> {
    set_budget(opts.budget);
    let shift = manifest.resolve_shift(shift_name)?;
    let (json, text, verified) = match op {
        "analyze" => {
            let r = cmd_analyze(&shift, opts.period_bound)?;
            let text = render_analyze(&r);
            (
                serde_json::to_value(&r).expect("report serializes"),
                text,
                true,
            )
        }
        "decompose" => {
            let (r, _) = cmd_decompose(&shift, opts.certificates)?;
            let text = render_decompose(&r);
            let ok = r.verified;
            (
                serde_json::to_value(&r).expect("report serializes"),
                text,
                ok,
            )
        }
        "invariants" => {
            let r = cmd_invariants(&shift, opts.period_bound)?;
            let text = render_invariants(&r);
            let ok = r.consistent;
            (
                serde_json::to_value(&r).expect("report serializes"),
                text,
                ok,
            )
        }
        "star" => {
            let r = cmd_star(&shift, opts.period_bound)?;
            let text = render_star(&r);
            let ok = r.verified;
            (
                serde_json::to_value(&r).expect("report serializes"),
                text,
                ok,
            )
        }
        "dot" => {
            let dot = cmd_dot(&shift, manifest.declared_width(shift_name)?, false)?;
            (serde_json::Value::String(dot.clone()), dot, true)
        }
        other => return Err(CliError::Resolve(format!("unknown operation {other:?}"))),
    };
    Ok(TaskOutput {
        op: op.to_string(),
        shift: shift_name.to_string(),
        json,
        text,
        verified,
    })
}

/// Runs every manifest task on its own thread; results come back in manifest order.
pub fn run_tasks(manifest: &Manifest, opts: RunOptions) -> Vec<CliResult<TaskOutput>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = manifest
            .tasks
            .iter()
            .map(|t| {
                let o = RunOptions {
                    period_bound: t.period_bound.unwrap_or(opts.period_bound),
                    ..opts
                };
                scope.spawn(move || run_task(manifest, &t.op, &t.shift, o))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(CliError::Other("task panicked".into())))
            })
            .collect()
    })
}

fn render_factors(f: &[FactorReport]) -> String {
    let v: Vec<&str> = f.iter().map(|x| x.structure.as_str()).collect();
    format!("[{}]", v.join(", "))
}

pub fn render_analyze(r: &AnalyzeReport) -> String {
    format!(
        "limit_degree: {}\nentropy_log: {:.6}\nminimal_step: {}\nsigma_components: {}\nhead_order: {}\n\
         head_sigma_bijective: {}\nis_sigma_connected: {}\nis_sigma_infinitesimal: {}\nperiodic_counts: [{}]\n",
        r.limit_degree,
        r.entropy_log,
        r.minimal_step,
        r.sigma_components,
        r.head_order,
        r.head_sigma_bijective,
        r.is_sigma_connected,
        r.is_sigma_infinitesimal,
        r.periodic_counts.join(", ")
    )
}

pub fn render_decompose(r: &DecomposeReport) -> String {
    let mut s = format!(
        "head: {} (order {})\nchain_length: {}\nfactors: {}\ntail_order: {}\ntail_nilpotency: {}\nverified: {}\n",
        r.head_structure,
        r.head_order,
        r.chain_length,
        render_factors(&r.factors),
        r.tail_order,
        r.tail_nilpotency,
        r.verified
    );
    for f in &r.failures {
        writeln!(s, "  failure: {f}").expect("string write");
    }
    if let Some(certs) = &r.certificates {
        for c in certs {
            writeln!(
                s,
                "certificate {} onto {}^N, anticipation {}:",
                c.member, c.target, c.anticipation
            )
            .expect("string write");
            for (b, x) in c.blocks.iter().zip(&c.images) {
                writeln!(s, "  {b} -> {x}").expect("string write");
            }
        }
    }
    s
}

pub fn render_invariants(r: &InvariantsReport) -> String {
    let opt = |v: &Option<u64>| v.map_or("?".to_string(), |x| x.to_string());
    let f: Vec<String> = r.f.iter().map(opt).collect();
    let c: Vec<String> = r
        .cycle_counts
        .iter()
        .map(|v| v.map_or("?".to_string(), |x| x.to_string()))
        .collect();
    format!(
        "d: {}\nfixed_alphabet_check: {}\nf: [{}]\ncycle_counts: [{}]\nconsistent: {}\nell: {}\n",
        r.d,
        r.fixed_alphabet_check,
        f.join(", "),
        c.join(", "),
        r.consistent,
        r.ell
            .map_or(format!("unknown (searched up to {})", r.ell_bound), |e| e
                .to_string())
    )
}

pub fn render_star(r: &StarReport) -> String {
    let mut s = format!(
        "limit_degree: {}\nwidth: {}\nstates: {}\nis_trivial: {}\nperiodic_counts: [{}]\n\
         head_order: {}\nchain_length: {}\nfactors: {}\nverified: {}\n",
        r.limit_degree,
        r.width,
        r.states,
        r.is_trivial,
        r.periodic_counts.join(", "),
        r.head_order,
        r.chain_length,
        render_factors(&r.factors),
        r.verified
    );
    for f in &r.failures {
        writeln!(s, "  failure: {f}").expect("string write");
    }
    s
}

/// The tail of a shift's series as a one-line summary, for quick inspection.
pub fn tail_summary(shift: &GroupShift) -> CliResult<String> {
    let s = decompose(shift)?;
    let t = s.tail();
    Ok(format!(
        "{} points, nilpotency {}",
        t.point_count().unwrap_or(0),
        nilpotency_index(t)?
    ))
}
