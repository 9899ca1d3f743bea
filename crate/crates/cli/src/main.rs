//! Command-line front end for the claim harness.
//!
//! Exit codes: 0 success with nothing found, 1 usage or parse error,
//! 2 re-validated violations/counterexamples/discrepancies found,
//! 3 proof trace violated inside the thm1 dichotomy.

use hamlab::{
    catalog, contains_induced, from_graph6, gallery_check, hamiltonian_cycle, hunt, in_aleph,
    independence_number, is_free, longest_cycle, theorem1_dichotomy, to_graph6, toughness,
    verify_claim, vertex_connectivity, ClaimId, DichotomyError, DichotomyResult, HarnessError,
    Pattern, PatternId, UniverseSpec, VerificationReport,
};
use std::path::PathBuf;
use std::process::ExitCode;

const USAGE: &str = "\
hamlab - exact hamiltonicity checks on small graphs

USAGE:
    hamlab check <graph6> [--json]
    hamlab verify <claim> [--n-max N] [--universe FILE] [--skip-bad] [--jobs K] [--json]
    hamlab hunt <conjecture> [--n-max N] [--universe FILE] [--skip-bad] [--jobs K] [--json]
    hamlab gallery [--json]
    hamlab gen --n N [--connected] [--free PATTERN]...

SUBCOMMANDS:
    check     full invariant panel for one graph6-encoded graph
    verify    scan a universe for violations of a claim
              claims: prop1 prop2 thmA thm1 cor1 thm2 conj1..conj5
    hunt      counterexample hunt for a conjecture (conj1..conj5)
    gallery   check every fixed sharpness assertion (K2,3, H1, Petersen)
    gen       emit one graph6 line per non-isomorphic graph on N vertices

OPTIONS:
    --n-max N       built-in universe bound (default 7, max 10)
    --universe F    use a graph6 file as the universe instead
    --skip-bad      skip unparseable universe lines instead of aborting
    --jobs K        shard the scan over K threads (default 1)
    --json          emit reports as JSON lines
    --connected     restrict gen to connected graphs
    --free P        restrict gen to graphs with no induced copy of P;
                    repeatable. patterns: K1+P2 K1+P3 K1+P4 K1+P5 K1+P6
                    K2+P3 2K2 K2+K3 K1+K1,3 P3 P4 K1,3 K1,3+e 2K1 3K1

EXIT CODES:
    0  completed, nothing found     2  violations or counterexamples found
    1  usage or parse error         3  proof trace violated
";

/// Writes to stdout, exiting quietly if the downstream pipe has closed
/// (plain `outln!` would panic on EPIPE).
fn emit_str(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(s.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($t:tt)*) => { emit_str(&format!("{}\n", format_args!($($t)*))) };
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("run `hamlab` with no arguments for usage");
            ExitCode::from(1)
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let Some(cmd) = args.first() else {
        emit_str(USAGE);
        return Ok(ExitCode::from(1));
    };
    match cmd.as_str() {
        "check" => cmd_check(&args[1..]),
        "verify" => cmd_verify_or_hunt(&args[1..], false),
        "hunt" => cmd_verify_or_hunt(&args[1..], true),
        "gallery" => cmd_gallery(&args[1..]),
        "gen" => cmd_gen(&args[1..]),
        "--help" | "-h" | "help" => {
            emit_str(USAGE);
            Ok(ExitCode::from(0))
        }
        other => Err(format!("unknown subcommand `{other}`")),
    }
}

struct Flags {
    n_max: usize,
    universe: Option<PathBuf>,
    skip_bad: bool,
    jobs: usize,
    json: bool,
    connected: bool,
    free: Vec<PatternId>,
    n: Option<usize>,
    positional: Vec<String>,
}

fn parse_flags(args: &[String]) -> Result<Flags, String> {
    let mut flags = Flags {
        n_max: 7,
        universe: None,
        skip_bad: false,
        jobs: 1,
        json: false,
        connected: false,
        free: Vec::new(),
        n: None,
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut value_for = |name: &str| {
            it.next()
                .map(String::as_str)
                .ok_or_else(|| format!("{name} needs a value"))
        };
        match arg.as_str() {
            "--n-max" => {
                flags.n_max = value_for("--n-max")?
                    .parse()
                    .map_err(|_| "--n-max needs an integer".to_string())?
            }
            "--n" => {
                flags.n = Some(
                    value_for("--n")?
                        .parse()
                        .map_err(|_| "--n needs an integer".to_string())?,
                )
            }
            "--jobs" => {
                flags.jobs = value_for("--jobs")?
                    .parse()
                    .map_err(|_| "--jobs needs an integer".to_string())?;
                if flags.jobs == 0 {
                    return Err("--jobs must be at least 1".into());
                }
            }
            "--universe" => flags.universe = Some(PathBuf::from(value_for("--universe")?)),
            "--skip-bad" => flags.skip_bad = true,
            "--json" => flags.json = true,
            "--connected" => flags.connected = true,
            "--free" => {
                let token = value_for("--free")?;
                let id = PatternId::parse(token)
                    .ok_or_else(|| format!("unknown pattern token `{token}`"))?;
                flags.free.push(id);
            }
            other if other.starts_with("--") => return Err(format!("unknown flag `{other}`")),
            other => flags.positional.push(other.to_string()),
        }
    }
    Ok(flags)
}

fn print_report(report: &VerificationReport, json: bool) {
    if json {
        outln!("{}", report.to_json_line());
    } else {
        outln!("{}", report.human_line());
        for v in &report.violations {
            outln!("    violation: {v}");
        }
    }
}

fn harness_exit(err: HarnessError) -> Result<ExitCode, String> {
    match err {
        HarnessError::ProofTraceViolated(v) => {
            eprintln!("PROOF TRACE VIOLATED: {v}");
            Ok(ExitCode::from(3))
        }
        other => Err(other.to_string()),
    }
}

fn cmd_verify_or_hunt(args: &[String], hunting: bool) -> Result<ExitCode, String> {
    let flags = parse_flags(args)?;
    let [claim] = flags.positional.as_slice() else {
        return Err(format!(
            "expected exactly one claim id, got {}",
            flags.positional.len()
        ));
    };
    let id = ClaimId::parse(claim).ok_or_else(|| format!("unknown claim id `{claim}`"))?;
    let universe = match &flags.universe {
        Some(path) => UniverseSpec::File {
            path: path.clone(),
            skip_bad: flags.skip_bad,
        },
        None => UniverseSpec::Generated { n_max: flags.n_max },
    };
    if !flags.json {
        let claim = id.claim();
        outln!("{id}: {} implies {}", claim.hypothesis, claim.conclusion);
    }
    let result = if hunting {
        hunt(id, &universe, flags.jobs)
    } else {
        verify_claim(id, &universe, flags.jobs)
    };
    match result {
        Ok(report) => {
            print_report(&report, flags.json);
            if report.violations.is_empty() {
                Ok(ExitCode::from(0))
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Err(e) => harness_exit(e),
    }
}

fn cmd_gallery(args: &[String]) -> Result<ExitCode, String> {
    let flags = parse_flags(args)?;
    if !flags.positional.is_empty() {
        return Err("gallery takes no positional arguments".into());
    }
    let reports = gallery_check();
    let mut discrepant = 0;
    for report in &reports {
        print_report(report, flags.json);
        if !report.violations.is_empty() {
            discrepant += 1;
        }
    }
    if !flags.json {
        outln!(
            "{} assertions, {} confirmed, {discrepant} discrepant",
            reports.len(),
            reports.len() - discrepant
        );
    }
    Ok(ExitCode::from(if discrepant > 0 { 2 } else { 0 }))
}

fn cmd_gen(args: &[String]) -> Result<ExitCode, String> {
    let flags = parse_flags(args)?;
    if !flags.positional.is_empty() {
        return Err("gen takes no positional arguments".into());
    }
    let n = flags.n.ok_or("gen requires --n")?;
    let patterns: Vec<Pattern> = flags.free.iter().map(|&id| Pattern::new(id)).collect();
    let stream = hamlab::enumerate_graphs(n, flags.connected).map_err(|e| e.to_string())?;
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    use std::io::Write;
    for g in stream.filter(|g| patterns.is_empty() || is_free(g, &patterns)) {
        if let Err(e) = writeln!(out, "{}", to_graph6(&g)) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                return Ok(ExitCode::from(0));
            }
            return Err(e.to_string());
        }
    }
    if let Err(e) = out.flush() {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return Err(e.to_string());
        }
    }
    Ok(ExitCode::from(0))
}

fn cmd_check(args: &[String]) -> Result<ExitCode, String> {
    let flags = parse_flags(args)?;
    let [encoded] = flags.positional.as_slice() else {
        return Err(format!(
            "expected exactly one graph6 string, got {}",
            flags.positional.len()
        ));
    };
    let g = from_graph6(encoded).map_err(|e| format!("bad graph6 input: {e}"))?;

    let tough = toughness(&g);
    let kappa = vertex_connectivity(&g);
    let (alpha, alpha_witness) = independence_number(&g);
    let ham = hamiltonian_cycle(&g);
    let aleph = in_aleph(&g);
    let longest = if ham.is_none() && g.n() <= 16 {
        longest_cycle(&g)
    } else {
        None
    };
    let free_verdicts: Vec<(PatternId, bool)> = catalog()
        .iter()
        .map(|p| (p.id, contains_induced(&g, p).is_none()))
        .collect();
    let dichotomy = if contains_induced(&g, &Pattern::new(PatternId::K1P2)).is_none() {
        Some(theorem1_dichotomy(&g))
    } else {
        None
    };

    if flags.json {
        let contained: Vec<String> = free_verdicts
            .iter()
            .filter(|(_, free)| !free)
            .map(|(id, _)| id.token().to_string())
            .collect();
        let free: Vec<String> = free_verdicts
            .iter()
            .filter(|(_, free)| *free)
            .map(|(id, _)| id.token().to_string())
            .collect();
        let value = serde_json::json!({
            "graph6": to_graph6(&g),
            "n": g.n(),
            "edges": g.edge_count(),
            "degree_sequence": g.degree_sequence(),
            "connected": g.is_connected(),
            "components": g.components().len(),
            "toughness": tough.value.to_string(),
            "toughness_witness": tough.witness.map(|w| w.to_vec()),
            "connectivity": kappa,
            "independence_number": alpha,
            "independence_witness": alpha_witness.to_vec(),
            "hamiltonian": ham.is_some(),
            "hamilton_cycle": ham.as_ref().map(|c| c.to_string()),
            "longest_cycle": longest.as_ref().map(|c| c.len()),
            "in_aleph": aleph.is_some(),
            "aleph_cert": aleph,
            "free_of": free,
            "contains_induced": contained,
        });
        outln!("{value}");
    } else {
        outln!("graph6:        {}", to_graph6(&g));
        outln!("n:             {}", g.n());
        outln!("edges:         {}", g.edge_count());
        outln!("degrees:       {:?}", g.degree_sequence());
        outln!(
            "connected:     {} ({} components)",
            g.is_connected(),
            g.components().len()
        );
        match &tough.witness {
            Some(w) => outln!("toughness:     {} (witness S={w})", tough.value),
            None => outln!("toughness:     {}", tough.value),
        }
        outln!("connectivity:  {kappa}");
        outln!("independence:  {alpha} (witness {alpha_witness})");
        match &ham {
            Some(c) => outln!("hamiltonian:   yes (cycle {c})"),
            None => match &longest {
                Some(c) => outln!("hamiltonian:   no (longest cycle {}: {c})", c.len()),
                None => outln!("hamiltonian:   no"),
            },
        }
        match &aleph {
            Some(cert) => {
                let layers: Vec<String> = cert.layers.iter().map(|l| l.to_string()).collect();
                outln!(
                    "in aleph:      yes (layers [{}], terminal {:?} {})",
                    layers.join(", "),
                    cert.terminal,
                    cert.terminal_set
                );
            }
            None => outln!("in aleph:      no"),
        }
        let free: Vec<&str> = free_verdicts
            .iter()
            .filter(|(_, f)| *f)
            .map(|(id, _)| id.token())
            .collect();
        let contained: Vec<&str> = free_verdicts
            .iter()
            .filter(|(_, f)| !f)
            .map(|(id, _)| id.token())
            .collect();
        outln!("free of:       {}", free.join(" "));
        outln!("contains:      {}", contained.join(" "));
    }

    match dichotomy {
        Some(Err(DichotomyError::ProofTraceViolated(v))) => {
            eprintln!("PROOF TRACE VIOLATED: {v}");
            Ok(ExitCode::from(3))
        }
        Some(Err(DichotomyError::PreconditionViolated(_))) => {
            unreachable!("dichotomy only runs on K1+P2-free inputs")
        }
        Some(Ok(result)) => {
            if !flags.json {
                match result {
                    DichotomyResult::Hamiltonian(_) => {
                        outln!("dichotomy:     hamiltonian arm");
                    }
                    DichotomyResult::NotHamiltonian { independent, .. } => {
                        outln!(
                            "dichotomy:     nonhamiltonian arm (independent majority {independent})"
                        );
                    }
                }
            }
            Ok(ExitCode::from(0))
        }
        None => Ok(ExitCode::from(0)),
    }
}
