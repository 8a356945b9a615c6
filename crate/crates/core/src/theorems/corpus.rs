//! Corpus sweeps: a key-value config names graph families, parameter
//! ranges and budgets; [`run_corpus`] expands it into an ordered task list
//! and runs every check on every instance.
//!
//! ```text
//! # comment
//! families = table, random
//! random.n = 2..7        # inclusive ranges, single values or comma lists
//! heavy = false
//! ```

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::graph::{
    complete, complete_bipartite, cycle, hoffman_singleton, petersen, random_connected, Graph,
};
use crate::group::{
    alternating_group, automorphism_group_with_budget, cyclic_group, dihedral_group,
    direct_product_symmetric, pgammal_2_8, pgl_2_8, symmetric_group, wreath_symmetric_2,
    GroupError, PermGroup,
};
use crate::parse::{content_lines, parse_usize, ParseError};

use super::checks::*;
use super::outcome::{CheckOutcome, Recorder};
use super::rows::{check_classification_row, check_knn_conditions, ClassificationRow};

pub const DEFAULT_CONFIG: &str = "\
# Every classification row except HoSi (heavy), the K_{n,n} conditions,
# small named families, random graphs and the long-cycle regime.
families = table, knn, complete, complete-bipartite, cycle, petersen, random, cycle-regime, hoffman-singleton
table.complete.n = 4..9
table.complete-bipartite.n = 2..4
complete.n = 2..7
complete-bipartite.n = 1..4
cycle.n = 3..10
random.count = 30
random.n = 2..7
random.p = 0.3
s = 1..5
subgroups = 8
seed = 1
heavy = false
budget = 1800
nodes = 2000000
cycle-regime.n = 16..19
";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Table,
    Knn,
    Complete,
    CompleteBipartite,
    Cycle,
    Petersen,
    Random,
    CycleRegime,
    HoffmanSingleton,
}

impl Family {
    const ALL: [(Family, &'static str); 9] = [
        (Family::Table, "table"),
        (Family::Knn, "knn"),
        (Family::Complete, "complete"),
        (Family::CompleteBipartite, "complete-bipartite"),
        (Family::Cycle, "cycle"),
        (Family::Petersen, "petersen"),
        (Family::Random, "random"),
        (Family::CycleRegime, "cycle-regime"),
        (Family::HoffmanSingleton, "hoffman-singleton"),
    ];

    pub fn name(self) -> &'static str {
        Family::ALL
            .iter()
            .find(|(f, _)| *f == self)
            .expect("listed")
            .1
    }

    fn parse(name: &str) -> Option<Family> {
        Family::ALL
            .iter()
            .find(|(_, n)| *n == name)
            .map(|(f, _)| *f)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusConfig {
    pub families: Vec<Family>,
    pub table_complete: Vec<usize>,
    pub table_complete_bipartite: Vec<usize>,
    pub complete: Vec<usize>,
    pub complete_bipartite: Vec<usize>,
    pub cycle: Vec<usize>,
    pub random_count: usize,
    pub random_n: Vec<usize>,
    pub random_p: f64,
    pub s: Vec<usize>,
    pub subgroups: usize,
    pub seed: u64,
    pub heavy: bool,
    /// Wall-clock budget; tasks not started before it runs out are skipped.
    pub budget: Option<Duration>,
    /// Node budget for each automorphism search.
    pub nodes: u64,
    pub cycle_regime: Vec<usize>,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig::parse(DEFAULT_CONFIG).expect("default config parses")
    }
}

impl CorpusConfig {
    /// No families; every other key at its built-in value.
    fn empty() -> Self {
        CorpusConfig {
            families: Vec::new(),
            table_complete: (4..=9).collect(),
            table_complete_bipartite: (2..=4).collect(),
            complete: (2..=7).collect(),
            complete_bipartite: (1..=4).collect(),
            cycle: (3..=10).collect(),
            random_count: 30,
            random_n: (2..=7).collect(),
            random_p: 0.3,
            s: (1..=5).collect(),
            subgroups: 8,
            seed: 1,
            heavy: false,
            budget: None,
            nodes: crate::group::DEFAULT_NODE_BUDGET,
            cycle_regime: (16..=19).collect(),
        }
    }

    /// Parses a config. Keys not given keep their built-in values; an
    /// absent `families` key selects nothing.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut config = CorpusConfig::empty();
        for (line, content) in content_lines(text) {
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| ParseError::new(line, "expected key = value"))?;
            config.set(line, key.trim(), value.trim())?;
        }
        Ok(config)
    }

    /// Applies one `key = value` setting; `line` is used for errors.
    pub fn set(&mut self, line: usize, key: &str, value: &str) -> Result<(), ParseError> {
        let list = |v: &str| parse_list(line, v);
        let one = |v: &str| parse_usize(line, v, key);
        match key {
            "families" => {
                self.families = value
                    .split(',')
                    .map(str::trim)
                    .filter(|f| !f.is_empty())
                    .map(|f| {
                        Family::parse(f)
                            .ok_or_else(|| ParseError::new(line, format!("unknown family {f:?}")))
                    })
                    .collect::<Result<_, _>>()?
            }
            "table.complete.n" => self.table_complete = list(value)?,
            "table.complete-bipartite.n" => self.table_complete_bipartite = list(value)?,
            "complete.n" => self.complete = list(value)?,
            "complete-bipartite.n" => self.complete_bipartite = list(value)?,
            "cycle.n" => self.cycle = list(value)?,
            "random.count" => self.random_count = one(value)?,
            "random.n" => self.random_n = list(value)?,
            "random.p" => {
                self.random_p = value
                    .parse::<f64>()
                    .ok()
                    .filter(|p| (0.0..=1.0).contains(p))
                    .ok_or_else(|| ParseError::new(line, "random.p must lie in [0, 1]"))?
            }
            "s" => self.s = list(value)?,
            "subgroups" => self.subgroups = one(value)?,
            "seed" => {
                self.seed = value
                    .parse()
                    .map_err(|_| ParseError::new(line, format!("bad seed {value:?}")))?
            }
            "heavy" => {
                self.heavy = value
                    .parse()
                    .map_err(|_| ParseError::new(line, "heavy must be true or false"))?
            }
            "budget" => {
                let secs = value
                    .parse::<f64>()
                    .ok()
                    .filter(|s| *s >= 0.0)
                    .ok_or_else(|| ParseError::new(line, "budget must be a number of seconds"))?;
                self.budget = Some(Duration::from_secs_f64(secs));
            }
            "nodes" => self.nodes = one(value)? as u64,
            "cycle-regime.n" => self.cycle_regime = list(value)?,
            _ => return Err(ParseError::new(line, format!("unknown key {key:?}"))),
        }
        Ok(())
    }
}

/// `a..b` (inclusive), single values, or comma-separated mixtures.
fn parse_list(line: usize, value: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for item in value.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        match item.split_once("..") {
            Some((a, b)) => {
                let a = parse_usize(line, a.trim(), "range start")?;
                let b = parse_usize(line, b.trim(), "range end")?;
                out.extend(a..=b);
            }
            None => out.push(parse_usize(line, item, "value")?),
        }
    }
    Ok(out)
}

fn format_list(values: &[usize]) -> String {
    match values {
        [] => String::new(),
        [first, .., last] if values.windows(2).all(|w| w[1] == w[0] + 1) => {
            format!("{first}..{last}")
        }
        _ => values
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(","),
    }
}

/// One line: every key with its effective value.
impl fmt::Display for CorpusConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let families: Vec<&str> = self.families.iter().map(|f| f.name()).collect();
        let budget = match self.budget {
            Some(b) => format!("{}", b.as_secs_f64()),
            None => "none".into(),
        };
        write!(
            f,
            "families={} table.complete.n={} table.complete-bipartite.n={} complete.n={} \
             complete-bipartite.n={} cycle.n={} random.count={} random.n={} random.p={} s={} \
             subgroups={} seed={} heavy={} budget={budget} nodes={} cycle-regime.n={}",
            families.join(","),
            format_list(&self.table_complete),
            format_list(&self.table_complete_bipartite),
            format_list(&self.complete),
            format_list(&self.complete_bipartite),
            format_list(&self.cycle),
            self.random_count,
            format_list(&self.random_n),
            self.random_p,
            format_list(&self.s),
            self.subgroups,
            self.seed,
            self.heavy,
            self.nodes,
            format_list(&self.cycle_regime),
        )
    }
}

type GroupBuilder = Arc<dyn Fn() -> Result<PermGroup, GroupError> + Send + Sync>;

enum Task {
    Row {
        row: ClassificationRow,
        group_name: String,
        group: GroupBuilder,
    },
    Knn {
        n: usize,
        group_name: String,
        group: GroupBuilder,
    },
    Graph {
        name: String,
        graph: Graph,
        seed: u64,
    },
    CycleRegime(usize),
    /// An instance left out on purpose, with the reason.
    Omitted {
        check: &'static str,
        instance: String,
        reason: String,
    },
}

impl Task {
    fn label(&self) -> (&'static str, String) {
        match self {
            Task::Row {
                row, group_name, ..
            } => ("classification-row", format!("{row} with {group_name}")),
            Task::Knn { n, group_name, .. } => {
                ("knn-conditions", format!("K{n},{n} with {group_name}"))
            }
            Task::Graph { name, .. } => ("graph-checks", name.clone()),
            Task::CycleRegime(n) => ("cycle-regime", format!("C{n}")),
            Task::Omitted {
                check, instance, ..
            } => (check, instance.clone()),
        }
    }
}

fn named(f: impl Fn() -> Result<PermGroup, GroupError> + Send + Sync + 'static) -> GroupBuilder {
    Arc::new(f)
}

fn row_groups(row: ClassificationRow, nodes: u64) -> Vec<(String, GroupBuilder)> {
    let full = move || -> Result<PermGroup, GroupError> {
        automorphism_group_with_budget(&row.graph(), nodes)
    };
    match row {
        ClassificationRow::K2 => vec![
            ("S2".into(), named(|| symmetric_group(2))),
            ("1".into(), named(|| Ok(PermGroup::trivial(2)))),
        ],
        ClassificationRow::K3 => vec![
            ("S3".into(), named(|| symmetric_group(3))),
            ("A3".into(), named(|| alternating_group(3))),
        ],
        ClassificationRow::Complete(n) => {
            let mut groups: Vec<(String, GroupBuilder)> = vec![
                (format!("S{n}"), named(move || symmetric_group(n))),
                (format!("A{n}"), named(move || alternating_group(n))),
            ];
            if n == 9 {
                groups.push(("PGammaL(2,8)".into(), named(|| Ok(pgammal_2_8()))));
                groups.push(("PGL(2,8)".into(), named(|| Ok(pgl_2_8()))));
            }
            groups
        }
        ClassificationRow::CompleteBipartite(n) => vec![
            (format!("S{n} wr S2"), named(move || wreath_symmetric_2(n))),
            (
                format!("S{n} x S{n}"),
                named(move || direct_product_symmetric(n, n)),
            ),
        ],
        ClassificationRow::C5 => vec![
            ("D10".into(), named(|| dihedral_group(5))),
            ("C5".into(), named(|| cyclic_group(5))),
        ],
        ClassificationRow::Petersen | ClassificationRow::HoffmanSingleton => {
            let derived = move || full().map(|g| g.derived_subgroup());
            let name = row.to_string();
            vec![
                (format!("Aut({name})"), named(full)),
                (format!("Aut({name})'"), named(derived)),
            ]
        }
    }
}

fn build_tasks(config: &CorpusConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    let graph_task = |tasks: &mut Vec<Task>, name: String, graph: Graph| {
        let seed = config.seed ^ name_hash(&name);
        tasks.push(Task::Graph { name, graph, seed });
    };
    for &family in &config.families {
        match family {
            Family::Table => {
                let mut rows = vec![ClassificationRow::K2, ClassificationRow::K3];
                rows.extend(
                    config
                        .table_complete
                        .iter()
                        .filter(|&&n| n >= 4)
                        .map(|&n| ClassificationRow::Complete(n)),
                );
                rows.extend(
                    config
                        .table_complete_bipartite
                        .iter()
                        .filter(|&&n| n >= 2)
                        .map(|&n| ClassificationRow::CompleteBipartite(n)),
                );
                rows.extend([ClassificationRow::C5, ClassificationRow::Petersen]);
                for row in rows {
                    for (group_name, group) in row_groups(row, config.nodes) {
                        tasks.push(Task::Row {
                            row,
                            group_name,
                            group,
                        });
                    }
                }
                if config.heavy {
                    let row = ClassificationRow::HoffmanSingleton;
                    for (group_name, group) in row_groups(row, config.nodes) {
                        tasks.push(Task::Row {
                            row,
                            group_name,
                            group,
                        });
                    }
                } else {
                    tasks.push(heavy_omitted("classification-row", "HoSi"));
                }
            }
            Family::Knn => {
                for &n in config.table_complete_bipartite.iter().filter(|&&n| n >= 2) {
                    tasks.push(Task::Knn {
                        n,
                        group_name: format!("S{n} wr S2"),
                        group: named(move || wreath_symmetric_2(n)),
                    });
                    tasks.push(Task::Knn {
                        n,
                        group_name: format!("S{n} x S{n}"),
                        group: named(move || direct_product_symmetric(n, n)),
                    });
                    let seed = config.seed.wrapping_add(n as u64);
                    for i in 0..config.subgroups {
                        tasks.push(Task::Knn {
                            n,
                            group_name: format!("sampled subgroup {i} of S{n} wr S2"),
                            group: named(move || {
                                let full = wreath_symmetric_2(n)?;
                                Ok(full
                                    .random_subgroups(i + 1, seed)
                                    .pop()
                                    .expect("i + 1 >= 1"))
                            }),
                        });
                    }
                }
            }
            Family::Complete => {
                for &n in config.complete.iter().filter(|&&n| n >= 2) {
                    graph_task(&mut tasks, format!("K{n}"), complete(n).expect("n >= 2"));
                }
            }
            Family::CompleteBipartite => {
                for &n in config.complete_bipartite.iter().filter(|&&n| n >= 1) {
                    for &m in config
                        .complete_bipartite
                        .iter()
                        .filter(|&&m| (1..=n).contains(&m))
                    {
                        let g = complete_bipartite(m, n).expect("m, n >= 1");
                        graph_task(&mut tasks, format!("K{m},{n}"), g);
                    }
                }
            }
            Family::Cycle => {
                for &n in config.cycle.iter().filter(|&&n| n >= 3) {
                    graph_task(&mut tasks, format!("C{n}"), cycle(n).expect("n >= 3"));
                }
            }
            Family::Petersen => graph_task(&mut tasks, "P".into(), petersen()),
            Family::Random => {
                let sizes: Vec<usize> = config
                    .random_n
                    .iter()
                    .copied()
                    .filter(|&n| n >= 2)
                    .collect();
                if !sizes.is_empty() {
                    for i in 0..config.random_count {
                        let n = sizes[i % sizes.len()];
                        let seed = config.seed.wrapping_add(i as u64);
                        let g = random_connected(n, config.random_p, seed);
                        graph_task(&mut tasks, format!("random n={n} seed={seed}"), g);
                    }
                }
            }
            Family::CycleRegime => {
                tasks.extend(config.cycle_regime.iter().map(|&n| Task::CycleRegime(n)));
            }
            Family::HoffmanSingleton => {
                if config.heavy {
                    graph_task(&mut tasks, "HoSi".into(), hoffman_singleton());
                } else {
                    tasks.push(heavy_omitted("graph-checks", "HoSi"));
                }
            }
        }
    }
    tasks
}

/// FNV-1a, so a graph's subgroup seed depends on its name and not on which
/// other tasks are enabled.
fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn heavy_omitted(check: &'static str, instance: &str) -> Task {
    Task::Omitted {
        check,
        instance: instance.into(),
        reason: "heavy instances are disabled (set heavy = true)".into(),
    }
}

fn graph_checks(name: &str, g: &Graph, seed: u64, config: &CorpusConfig) -> Vec<CheckOutcome> {
    let mut out = vec![
        check_distance_formula(name, g),
        check_reconstruction(name, g),
        check_subdivision_automorphisms(name, g, config.nodes),
    ];
    let aut = match automorphism_group_with_budget(g, config.nodes) {
        Ok(a) => a,
        Err(e) => {
            out.push(Recorder::new("subgroup-checks", name).skipped(e.to_string()));
            return out;
        }
    };
    for (i, group) in aut
        .random_subgroups(config.subgroups, seed)
        .iter()
        .enumerate()
    {
        let group_name = match i {
            0 => "trivial group".to_string(),
            1 => format!("Aut({name})"),
            _ => format!("sampled subgroup {i}"),
        };
        let subject = match Subject::new(name, g, group_name, group) {
            Ok(s) => s,
            Err(e) => {
                out.push(Recorder::new("subgroup-checks", name).skipped(e.to_string()));
                continue;
            }
        };
        for &s in &config.s {
            out.push(check_arc_lifting(&subject, s));
            out.push(check_distance_lifting(&subject, s));
            if s % 2 == 0 {
                out.push(check_girth_bound(&subject, s));
            }
        }
        out.push(check_small_s_equivalence(&subject));
        out.push(check_edge_stabilizers(&subject));
        out.push(check_girth5_three_arc(&subject));
    }
    out
}

fn run_task(task: &Task, config: &CorpusConfig) -> Vec<CheckOutcome> {
    let build_failed = |check: &'static str, instance: String, e: GroupError| {
        vec![Recorder::new(check, instance).skipped(e.to_string())]
    };
    match task {
        Task::Row {
            row,
            group_name,
            group,
        } => match group() {
            Ok(g) => vec![check_classification_row(*row, group_name, &g)],
            Err(e) => build_failed("classification-row", format!("{row} with {group_name}"), e),
        },
        Task::Knn {
            n,
            group_name,
            group,
        } => match group() {
            Ok(g) => vec![check_knn_conditions(*n, group_name, &g)],
            Err(e) => build_failed("knn-conditions", format!("K{n},{n} with {group_name}"), e),
        },
        Task::Graph { name, graph, seed } => graph_checks(name, graph, *seed, config),
        Task::CycleRegime(n) => vec![check_cycle_regime(*n, config.subgroups, config.seed)],
        Task::Omitted {
            check,
            instance,
            reason,
        } => {
            vec![Recorder::new(check, instance.clone()).skipped(reason.clone())]
        }
    }
}

/// Runs every check the config selects, in parallel. The result order
/// follows the config; tasks started after the wall-clock budget runs out
/// are reported as skipped.
pub fn run_corpus(config: &CorpusConfig) -> Vec<CheckOutcome> {
    let start = Instant::now();
    let tasks = build_tasks(config);
    tasks
        .par_iter()
        .map(|task| {
            if let Some(budget) = config.budget {
                if start.elapsed() > budget {
                    let (check, instance) = task.label();
                    return vec![Recorder::new(check, instance).skipped(format!(
                        "wall-clock budget of {} s exhausted",
                        budget.as_secs_f64()
                    ))];
                }
            }
            run_task(task, config)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::Summary;

    #[test]
    fn empty_config_runs_nothing() {
        let config = CorpusConfig::parse("# nothing\n").unwrap();
        assert!(config.families.is_empty());
        assert!(run_corpus(&config).is_empty());
    }

    #[test]
    fn parse_and_display() {
        let config = CorpusConfig::parse(
            "families = cycle, random\ncycle.n = 3..5, 8\nheavy = true\nbudget = 2.5\n",
        )
        .unwrap();
        assert_eq!(config.families, vec![Family::Cycle, Family::Random]);
        assert_eq!(config.cycle, vec![3, 4, 5, 8]);
        assert!(config.heavy);
        assert_eq!(config.budget, Some(Duration::from_millis(2500)));
        let line = config.to_string();
        assert!(line.starts_with("families=cycle,random "));
        assert!(line.contains(" cycle.n=3,4,5,8 "));
        assert!(line.contains(" s=1..5 "));
        let default = CorpusConfig::default();
        assert_eq!(default.families.len(), 9);
        assert_eq!(default.budget, Some(Duration::from_secs(1800)));
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert_eq!(
            CorpusConfig::parse("families = cycle\nfoo = 1\n")
                .unwrap_err()
                .line,
            2
        );
        assert_eq!(
            CorpusConfig::parse("families = nope\n").unwrap_err().line,
            1
        );
        assert_eq!(CorpusConfig::parse("\n\ns = 1..x\n").unwrap_err().line, 3);
        assert_eq!(CorpusConfig::parse("seed\n").unwrap_err().line, 1);
        assert!(CorpusConfig::parse("random.p = 2\n").is_err());
    }

    #[test]
    fn enabling_heavy_instances_leaves_the_rest_unchanged() {
        let text = "families = table, complete, random\ntable.complete.n = 4\n\
                    table.complete-bipartite.n = 2\ncomplete.n = 2..3\nrandom.count = 4\n\
                    random.n = 2..4\nsubgroups = 4\ns = 1..2\n";
        let light = CorpusConfig::parse(text).unwrap();
        let heavy = CorpusConfig {
            heavy: true,
            ..light.clone()
        };
        let strip = |outcomes: Vec<CheckOutcome>| -> Vec<String> {
            outcomes
                .into_iter()
                .filter(|o| !o.instance.starts_with("HoSi"))
                .map(|o| serde_json::to_string(&o).unwrap())
                .collect()
        };
        assert_eq!(strip(run_corpus(&light)), strip(run_corpus(&heavy)));
    }

    #[test]
    fn small_sweep_is_deterministic() {
        let text =
            "families = cycle, random, knn, hoffman-singleton\ncycle.n = 4..6\nrandom.count = 6\n\
                    random.n = 3..6\nsubgroups = 3\ntable.complete-bipartite.n = 2\nseed = 9\n";
        let config = CorpusConfig::parse(text).unwrap();
        let first = run_corpus(&config);
        let second = run_corpus(&config);
        let json = |o: &[CheckOutcome]| serde_json::to_string(o).unwrap();
        assert_eq!(json(&first), json(&second));
        let summary = Summary::of(&first);
        assert_eq!(
            summary.refuted,
            0,
            "{:?}",
            first
                .iter()
                .filter(|o| o.status.is_refuted())
                .collect::<Vec<_>>()
        );
        assert!(summary.confirmed > 100);
        let last = first.last().unwrap();
        assert_eq!(
            (last.check.as_str(), last.instance.as_str()),
            ("graph-checks", "HoSi")
        );
        assert!(last.status.is_skipped());
    }

    #[test]
    fn exhausted_budget_skips_everything() {
        let config = CorpusConfig::parse("families = cycle\ncycle.n = 3..5\nbudget = 0\n").unwrap();
        std::thread::sleep(Duration::from_millis(2));
        let out = run_corpus(&config);
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|o| o.status.is_skipped()));
    }
}
