//! Command-line surface over the library: colorability, chi_f, criticality,
//! catalog verification, closure suites, reducibility checks, enumeration,
//! polytope vertices, and the vertex-deletion averaging construction.
//!
//! Exit codes: 0 when every checked property holds, 1 when a checked
//! property fails, 2 on input or usage errors. All numbers print as exact
//! fractions.

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use fraccrit::catalog::{
    enumerate_critical, verify_catalog_jobs, verify_closure_jobs, Catalog, ClosureRule,
    DEFAULT_ENUM_BOUND,
};
use fraccrit::coloring::{colorability, fractional_chromatic, Colorability};
use fraccrit::combine::{combine_vertex_deleted, NailPlan};
use fraccrit::egraph::{parse_egraphs, serialize_egraphs, EGraph};
use fraccrit::polytope::{enumerate_vertices, Polytope, VertexEnumError};
use fraccrit::ratlp::parse_system;
use fraccrit::reduce::{
    check_excludable, check_standard_argument, is_reducible, parse_config, StandardArgument,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fraccrit", version, about = "Exact 11/4-coloring verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide 11/4-colorability of every e-graph in a file.
    Color {
        file: PathBuf,
        /// Dump the coloring witness (weights per independent set).
        #[arg(long)]
        witness: bool,
    },
    /// Exact fractional chromatic number of every graph in a file.
    Chif { file: PathBuf },
    /// Criticality of every e-graph in a file.
    Critical { file: PathBuf },
    /// Run the full catalog property suite.
    #[command(name = "verify-c0")]
    VerifyC0 {
        catalog: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Verify one closure transformation over the whole catalog.
    Closure {
        /// One of: nail-vertex, subdivide-edge-twice, add-path-between-nails,
        /// uncontract-edge-to-c4, add-common-neighbor, add-two-joined-apexes,
        /// attach-c4, attach-k13.
        rule: String,
        catalog: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a configuration file for reducibility.
    Reduce {
        config: PathBuf,
        /// Use the exclusion argument: trivial constraints plus the
        /// non-participating-vertex precondition.
        #[arg(long)]
        excludable: bool,
        /// Also check every external-degree variant of the boundary.
        #[arg(long)]
        exhaustive_variants: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the standard-argument conditions (i)-(iv) for a configuration
    /// with an [h] section.
    Argcheck {
        config: PathBuf,
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all valid critical e-graphs up to a vertex bound.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Enumerate the vertices of a polytope in the linear-system format.
    Vertices { file: PathBuf },
    /// Run the vertex-deletion averaging construction on a 3-regular graph.
    Combine {
        file: PathBuf,
        #[arg(long)]
        witness: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(2)
        }
    }
}

fn read_graphs(path: &Path) -> Result<Vec<EGraph>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let graphs = parse_egraphs(&text).with_context(|| format!("parsing {}", path.display()))?;
    if graphs.is_empty() {
        return Err(anyhow!("{}: no e-graph records", path.display()));
    }
    Ok(graphs)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Color { file, witness } => {
            let mut all = true;
            for (i, g) in read_graphs(&file)?.iter().enumerate() {
                if !g.is_subcubic() {
                    return Err(anyhow!("record {}: not subcubic", i + 1));
                }
                match colorability(g) {
                    Colorability::Colorable(w) => {
                        println!("record {}: 11/4-colorable", i + 1);
                        if witness {
                            print!("{}", w.dump());
                        }
                    }
                    Colorability::NotColorable(cert) => {
                        all = false;
                        let nonzero = cert.eq.iter().filter(|m| !m.is_zero()).count();
                        println!(
                            "record {}: not 11/4-colorable ({} nonzero certificate multipliers)",
                            i + 1,
                            nonzero
                        );
                    }
                }
            }
            Ok(all)
        }
        Cmd::Chif { file } => {
            let graphs = read_graphs(&file)?;
            for (i, g) in graphs.iter().enumerate() {
                let v = fractional_chromatic(g);
                if graphs.len() == 1 {
                    println!("{}", v);
                } else {
                    println!("record {}: {}", i + 1, v);
                }
            }
            Ok(true)
        }
        Cmd::Critical { file } => {
            let mut all = true;
            for (i, g) in read_graphs(&file)?.iter().enumerate() {
                let crit = fraccrit::catalog::is_critical(g);
                println!(
                    "record {}: {}",
                    i + 1,
                    if crit { "critical" } else { "not critical" }
                );
                all &= crit;
            }
            Ok(all)
        }
        Cmd::VerifyC0 {
            catalog,
            json,
            jobs,
        } => {
            let cat = load_catalog(&catalog)?;
            let report = verify_catalog_jobs(&cat, jobs);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.checks {
                    println!(
                        "{}: {} ({})",
                        c.check,
                        if c.passed { "pass" } else { "FAIL" },
                        c.detail
                    );
                }
                if report.all_passed() {
                    println!("{} members, all checks pass", cat.len());
                } else {
                    println!("{} members, some checks FAILED", cat.len());
                }
            }
            Ok(report.all_passed())
        }
        Cmd::Closure {
            rule,
            catalog,
            json,
            jobs,
        } => {
            let rule = ClosureRule::from_name(&rule)
                .ok_or_else(|| anyhow!("unknown closure rule `{}`", rule))?;
            let cat = load_catalog(&catalog)?;
            let report = verify_closure_jobs(&cat, rule, jobs);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for v in &report.violations {
                    println!(
                        "violation: member {} site {:?} result {}",
                        v.member, v.site, v.result
                    );
                }
                println!(
                    "{}: {} members, {} results checked, {} violations",
                    report.rule.name(),
                    report.members,
                    report.results_checked,
                    report.violations.len()
                );
            }
            Ok(report.passed())
        }
        Cmd::Reduce {
            config,
            excludable,
            exhaustive_variants,
            json,
        } => {
            let text = std::fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let (cfg, _) = parse_config(&text)?;
            let mut all = true;
            let variants = if exhaustive_variants {
                boundary_ext_variants(&cfg)
            } else {
                vec![(String::new(), cfg.clone())]
            };
            for (label, variant) in variants {
                let report = if excludable {
                    check_excludable(&variant.g1, &variant.boundary)?
                } else {
                    is_reducible(&variant)?
                };
                all &= report.reducible;
                if json {
                    println!("{}", serde_json::to_string_pretty(&report)?);
                } else {
                    let tag = if label.is_empty() {
                        String::new()
                    } else {
                        format!(" [{}]", label)
                    };
                    println!(
                        "{}{}: {} polytope vertices, {}",
                        if excludable { "excludable" } else { "reducible" },
                        tag,
                        report.polytope_vertices,
                        if report.reducible {
                            "all extend".to_string()
                        } else {
                            format!("{} fail to extend", report.failures.len())
                        }
                    );
                    for f in &report.failures {
                        println!("failing vertex:\n{}", f);
                    }
                }
            }
            Ok(all)
        }
        Cmd::Argcheck {
            config,
            catalog,
            json,
        } => {
            let text = std::fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let (cfg, h) = parse_config(&text)?;
            let h = h.ok_or_else(|| anyhow!("config has no [h] section"))?;
            let cat = load_catalog(&catalog)?;
            let arg = StandardArgument { config: cfg, h };
            let report = check_standard_argument(&arg, Some(&cat))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                let line = |name: &str, c: &fraccrit::reduce::ConditionReport| {
                    println!(
                        "({}) {}: {}",
                        name,
                        if c.passed { "pass" } else { "FAIL" },
                        c.detail
                    );
                };
                line("i", &report.substitute_valid);
                line("ii", &report.reducible);
                line("iii", &report.h_satisfies);
                if let Some(c) = &report.closure {
                    line("iv", c);
                }
            }
            Ok(report.all_passed())
        }
        Cmd::Enumerate { max_n, jobs } => {
            let _ = jobs;
            let limit = std::env::var("FRACCRIT_MAX_N")
                .ok()
                .and_then(|s| s.parse().ok())
                .unwrap_or(DEFAULT_ENUM_BOUND);
            let found = enumerate_critical(max_n, limit)?;
            print!("{}", serialize_egraphs(&found)?);
            eprintln!(
                "{} critical e-graphs with at most {} vertices",
                found.len(),
                max_n
            );
            Ok(true)
        }
        Cmd::Vertices { file } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let sys = parse_system(&text)?;
            match enumerate_vertices(&Polytope { system: sys }) {
                Ok(vertices) => {
                    for v in &vertices {
                        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                        println!("{}", parts.join(" "));
                    }
                    Ok(true)
                }
                Err(VertexEnumError::Unbounded(ray)) => {
                    let parts: Vec<String> = ray.iter().map(|x| x.to_string()).collect();
                    println!("unbounded; witness ray: {}", parts.join(" "));
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Combine { file, witness } => {
            let graphs = read_graphs(&file)?;
            let mut all = true;
            for (i, g) in graphs.iter().enumerate() {
                match combine_vertex_deleted(g, &NailPlan::new()) {
                    Ok(w) => {
                        println!("record {}: averaging succeeded", i + 1);
                        if witness {
                            print!("{}", w.dump());
                        }
                    }
                    Err(e) => {
                        all = false;
                        println!("record {}: {}", i + 1, e);
                    }
                }
            }
            Ok(all)
        }
    }
}

fn load_catalog(path: &Path) -> Result<Catalog> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Catalog::parse(&text)?)
}

/// Every assignment of external degrees 2 or 3 to the boundary vertices
/// (at least the vertex degree), labelled for the report.
fn boundary_ext_variants(
    cfg: &fraccrit::reduce::Configuration,
) -> Vec<(String, fraccrit::reduce::Configuration)> {
    let idx: Vec<usize> = cfg
        .boundary
        .iter()
        .map(|n| cfg.g1.index_of(n).expect("boundary resolved by the parser"))
        .collect();
    let mut out = Vec::new();
    let k = idx.len();
    'assign: for bits in 0..(1u32 << k) {
        let mut g1 = cfg.g1.clone();
        let mut label = Vec::new();
        for (j, &v) in idx.iter().enumerate() {
            let ext = if bits >> j & 1 == 1 { 3 } else { 2 };
            if (ext as usize) < g1.deg(v) {
                continue 'assign;
            }
            g1 = g1.with_ext(v, ext);
            label.push(format!("{}={}", cfg.boundary[j], ext));
        }
        out.push((
            label.join(","),
            fraccrit::reduce::Configuration {
                g1,
                boundary: cfg.boundary.clone(),
                constraints: cfg.constraints.clone(),
            },
        ));
    }
    out
}
