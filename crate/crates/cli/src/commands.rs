use crate::{ClassArg, Command, DeadArg, FamilyArg, Format, WitnessFamily};
use revsc_core::order::is_partially_ordered;
use revsc_core::search::{
    worst_case_reverse, ClassFilter, DeadMode, SearchConfig, SearchRecord, Symmetry,
};
use revsc_core::{
    dead_states, evaluate_bound, fig2_witness, fig5_witness, is_j_trivial, is_r_trivial,
    lemma2_bound, regex_to_min_dfa, reverse_state_complexity, state_complexity, table1_witness,
    trahtman_condition, BoundFamily, BoundQuery, Dfa, JMethod,
};
use serde_json::json;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

/// A failure with its process exit code.
pub struct CliError {
    pub code: u8,
    pub message: String,
    pub dump: Option<String>,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: 1,
            message: message.into(),
            dump: None,
        }
    }

    fn input(message: impl std::fmt::Display) -> CliError {
        CliError {
            code: 2,
            message: message.to_string(),
            dump: None,
        }
    }

    fn invariant(message: impl Into<String>, dfa: &Dfa) -> CliError {
        CliError {
            code: 3,
            message: message.into(),
            dump: Some(dfa.to_json()),
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::input(format!("{}: {e}", path.display()))
}

fn read_automaton(path: &Path) -> CliResult<Dfa> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_automaton(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn parse_automaton(text: &str) -> revsc_core::Result<Dfa> {
    if text.trim_start().starts_with("digraph") {
        Dfa::from_dot(text)
    } else {
        Dfa::from_json(text)
    }
}

fn write_output(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(dfa: &Dfa, format: Format) -> CliResult<String> {
    match format {
        Format::Json => Ok(dfa.to_json() + "\n"),
        Format::Dot => Ok(dfa.to_dot()),
        Format::Text => Ok(describe(dfa)),
        Format::Tsv => Err(CliError::usage(
            "tsv output is only available for search results",
        )),
    }
}

fn describe(dfa: &Dfa) -> String {
    let mut s = String::new();
    writeln!(s, "states: {}", dfa.state_count()).unwrap();
    writeln!(s, "alphabet: {}", dfa.letters().join(",")).unwrap();
    writeln!(s, "initial: {}", dfa.initial()).unwrap();
    writeln!(s, "accepting: {}", dfa.accepting()).unwrap();
    for q in 0..dfa.state_count() {
        let row: Vec<String> = dfa.row(q).iter().map(|t| t.to_string()).collect();
        writeln!(s, "  {q}: {}", row.join(" ")).unwrap();
    }
    s
}

/// Emits an automaton and its two state complexities.
fn emit_with_stats(dfa: &Dfa, format: Format, out: Option<&Path>) -> CliResult {
    let stats = format!(
        "sc={} sc_reverse={}",
        state_complexity(dfa),
        reverse_state_complexity(dfa)
    );
    let body = render(dfa, format)?;
    match out {
        Some(path) => {
            write_output(Some(path), &body)?;
            println!("{stats}");
        }
        None => {
            print!("{body}");
            eprintln!("{stats}");
        }
    }
    Ok(())
}

pub fn run(command: Command) -> CliResult {
    match command {
        Command::Classify { automaton, format } => classify(&automaton, format),
        Command::Witness {
            family,
            n,
            format,
            out,
        } => {
            let dfa = match family {
                WitnessFamily::Fig2 => fig2_witness(n),
                WitnessFamily::Fig5 => fig5_witness(n),
                WitnessFamily::Table1 => table1_witness(n),
            }
            .map_err(CliError::input)?;
            emit_with_stats(&dfa, format, out.as_deref())
        }
        Command::Bound { family, n, k } => {
            let family = match family {
                FamilyArg::R => BoundFamily::RTrivial,
                FamilyArg::J => BoundFamily::JTrivial,
            };
            let b = evaluate_bound(BoundQuery { n, k, family }).map_err(CliError::input)?;
            println!("{b}");
            Ok(())
        }
        Command::Regex {
            expression,
            alphabet,
            format,
            out,
        } => {
            let letters: Vec<String> = alphabet.split(',').map(|s| s.trim().to_string()).collect();
            if letters.iter().any(String::is_empty) {
                return Err(CliError::usage("alphabet must list nonempty letter names"));
            }
            let dfa = regex_to_min_dfa(&expression, &letters).map_err(CliError::input)?;
            emit_with_stats(&dfa, format, out.as_deref())
        }
        Command::Search {
            n,
            k,
            class,
            dead,
            jobs,
            no_symmetry,
            tsv,
            witness_out,
        } => {
            let class = match class {
                ClassArg::R => ClassFilter::RTrivial,
                ClassArg::J => ClassFilter::JTrivial,
            };
            let dead = match dead {
                DeadArg::Require => DeadMode::Require,
                DeadArg::Forbid => DeadMode::Forbid,
                DeadArg::Any => DeadMode::Any,
            };
            let symmetry = if no_symmetry {
                Symmetry::None
            } else {
                Symmetry::Full
            };
            let cfg = SearchConfig::new(n, k, class, dead).with_symmetry(symmetry);
            let rec = run_search(&cfg, jobs)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&rec).expect("record serializes")
            );
            if let (Some(path), Some(w)) = (&witness_out, rec.witness_dfa()) {
                write_output(Some(path), &(w.to_json() + "\n"))?;
            }
            if let Some(path) = tsv {
                let (no_dead, with_dead) = match dead {
                    DeadMode::Forbid => (cell(rec.max_reverse_sc), "-".to_string()),
                    DeadMode::Require => ("-".to_string(), cell(rec.max_reverse_sc)),
                    DeadMode::Any => ("-".to_string(), "-".to_string()),
                };
                let witness = witness_out
                    .as_ref()
                    .map_or("-".to_string(), |p| p.display().to_string());
                let row = tsv_row(n, k, class, &no_dead, &with_dead, &witness);
                append_line(&path, &row)?;
            }
            Ok(())
        }
        Command::Convert { input, to, out } => {
            let text = fs::read_to_string(&input).map_err(|e| io_error(&input, e))?;
            let dfa = parse_automaton(&text).map_err(CliError::input)?;
            let is_dot = text.trim_start().starts_with("digraph");
            let target = to.unwrap_or(if is_dot { Format::Json } else { Format::Dot });
            write_output(out.as_deref(), &render(&dfa, target)?)
        }
        Command::ReproduceTable1 {
            max_n,
            jobs,
            witness_dir,
            out,
        } => {
            let table = reproduce_table1(max_n, jobs, witness_dir.as_deref())?;
            write_output(out.as_deref(), &table)
        }
    }
}

fn cell(v: Option<usize>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

const TSV_HEADER: &str =
    "n\tworst_no_dead\tworst_with_dead\tupper_bound\tlower_bound\twitness_path";

fn tsv_row(
    n: usize,
    k: usize,
    class: ClassFilter,
    no_dead: &str,
    with_dead: &str,
    witness: &str,
) -> String {
    let (upper, lower) = if k == 2 && n >= 2 {
        (
            lemma2_bound(n).expect("n >= 2").to_string(),
            (1u64 << (n - 2)).to_string(),
        )
    } else {
        let family = match class {
            ClassFilter::RTrivial => BoundFamily::RTrivial,
            ClassFilter::JTrivial => BoundFamily::JTrivial,
        };
        let upper =
            evaluate_bound(BoundQuery { n, k, family }).map_or("-".to_string(), |b| b.to_string());
        (upper, "-".to_string())
    };
    format!("{n}\t{no_dead}\t{with_dead}\t{upper}\t{lower}\t{witness}")
}

fn append_line(path: &Path, line: &str) -> CliResult {
    let fresh = !path.exists();
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| io_error(path, e))?;
    if fresh {
        writeln!(f, "{TSV_HEADER}").map_err(|e| io_error(path, e))?;
    }
    writeln!(f, "{line}").map_err(|e| io_error(path, e))
}

/// Runs one search and re-verifies the witness it reports.
fn run_search(cfg: &SearchConfig, jobs: usize) -> CliResult<SearchRecord> {
    let rec = worst_case_reverse(cfg, jobs.max(1)).map_err(CliError::input)?;
    if let Some(w) = rec.witness_dfa() {
        let value = reverse_state_complexity(&w);
        let has_dead = !dead_states(&w).is_empty();
        let dead_ok = match cfg.dead {
            DeadMode::Require => has_dead,
            DeadMode::Forbid => !has_dead,
            DeadMode::Any => true,
        };
        let class_ok = match cfg.class {
            ClassFilter::RTrivial => is_r_trivial(&w),
            ClassFilter::JTrivial => is_j_trivial(&w, JMethod::ReversePo),
        };
        if Some(value) != rec.max_reverse_sc
            || state_complexity(&w) != cfg.n
            || !dead_ok
            || !class_ok
        {
            return Err(CliError::invariant(
                "search witness failed re-verification",
                &w,
            ));
        }
    }
    Ok(rec)
}

fn reproduce_table1(max_n: usize, jobs: usize, witness_dir: Option<&Path>) -> CliResult<String> {
    if !(2..=7).contains(&max_n) {
        return Err(CliError::usage("--max-n must be between 2 and 7"));
    }
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    }
    let mut out = String::new();
    writeln!(out, "{TSV_HEADER}").unwrap();
    for n in 2..=max_n {
        let mut cells = Vec::new();
        let mut paths = Vec::new();
        for (dead, tag) in [
            (DeadMode::Forbid, "no_dead"),
            (DeadMode::Require, "with_dead"),
        ] {
            let cfg = SearchConfig::new(n, 2, ClassFilter::RTrivial, dead);
            let rec = run_search(&cfg, jobs)?;
            cells.push(cell(rec.max_reverse_sc));
            if let (Some(dir), Some(w)) = (witness_dir, rec.witness_dfa()) {
                let path: PathBuf = dir.join(format!("table1_n{n}_{tag}.json"));
                write_output(Some(&path), &(w.to_json() + "\n"))?;
                paths.push(path.display().to_string());
            }
        }
        let witness = if paths.is_empty() {
            "-".to_string()
        } else {
            paths.join(",")
        };
        writeln!(
            out,
            "{}",
            tsv_row(n, 2, ClassFilter::RTrivial, &cells[0], &cells[1], &witness)
        )
        .unwrap();
    }
    Ok(out)
}

fn classify(path: &Path, format: Format) -> CliResult {
    let dfa = read_automaton(path)?;
    let sc = state_complexity(&dfa);
    let sc_rev = reverse_state_complexity(&dfa);
    let po = is_partially_ordered(&dfa);
    let r = is_r_trivial(&dfa);
    let verdicts: Vec<(JMethod, bool)> = JMethod::ALL
        .iter()
        .map(|&m| (m, is_j_trivial(&dfa, m)))
        .collect();
    if verdicts.iter().any(|&(_, v)| v != verdicts[0].1) {
        return Err(CliError::invariant(
            format!("J-triviality methods disagree: {verdicts:?}"),
            &dfa,
        ));
    }
    if r {
        // Trahtman's condition on the minimal DFA must match the verdicts
        let min = revsc_core::minimize(&dfa);
        if trahtman_condition(&min).ok() != Some(verdicts[0].1) {
            return Err(CliError::invariant("Trahtman condition inconsistent", &dfa));
        }
    }
    let yes = |b: bool| if b { "yes" } else { "no" };
    match format {
        Format::Json => {
            let mut j = serde_json::Map::new();
            for (m, v) in &verdicts {
                j.insert(m.to_string(), json!(v));
            }
            let value = json!({
                "states": dfa.state_count(),
                "sc": sc,
                "sc_reverse": sc_rev,
                "partially_ordered": po,
                "r_trivial": r,
                "j_trivial": j,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            println!("states: {}", dfa.state_count());
            println!("sc: {sc}");
            println!("sc_reverse: {sc_rev}");
            println!("partially_ordered: {}", yes(po));
            println!("r_trivial: {}", yes(r));
            for (m, v) in &verdicts {
                println!("j_trivial[{m}]: {}", yes(*v));
            }
        }
        Format::Dot | Format::Tsv => {
            return Err(CliError::usage("classify supports --format text or json"));
        }
    }
    Ok(())
}
