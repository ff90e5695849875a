use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bipoly_k3::config::{parse_config, ConfigFile};
use bipoly_k3::geometry::{base_point_orbits, fixline_classes, points_off_quadric, quadric_points, ruling_orbits};
use bipoly_k3::groups::{GroupLabel, Side};
use bipoly_k3::lattices::{adjoin_class, discriminant, discriminant_group, is_p_divisible, nikulin_count_check};
use bipoly_k3::singularities::{analyze, fiber_singularities, merge_nodes, nu_totals, Fiber, NodeOrbitRecord};
use bipoly_k3::tables::{format_factored, run_verification, Format, Scope, Table};
use bipoly_k3::Error;

#[derive(Parser)]
#[command(
    name = "bipoly-k3",
    version,
    about = "Recompute and verify the tables of K3 quotients by bi-polyhedral groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "tsv", value_parser = parse_format)]
    format: Format,
    /// Config file whose `node` records replace the built-in node data.
    #[arg(long, global = true)]
    nodes: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the seven groups.
    Groups,
    /// Orbits of ruling lines, and of base-locus points for a pencil degree.
    Orbits {
        #[arg(long, value_parser = parse_group)]
        group: GroupLabel,
        #[arg(long, value_parser = parse_degree)]
        degree: Option<u32>,
    },
    /// Orbits of fix-lines off the quadric.
    Fixlines {
        #[arg(long, value_parser = parse_group)]
        group: GroupLabel,
    },
    /// Singularities of the quotient of one member of the pencil.
    Sing {
        #[arg(long, value_parser = parse_group)]
        group: GroupLabel,
        #[arg(long, value_parser = parse_fiber)]
        fiber: Fiber,
    },
    /// Curve counts ν₁..ν₄ on the resolved quotient.
    Nu {
        #[arg(long, value_parser = parse_group)]
        group: GroupLabel,
        #[arg(long, value_parser = parse_degree)]
        degree: u32,
        #[arg(long, value_parser = parse_fiber)]
        fiber: Fiber,
    },
    /// Lattice queries on a curve-graph file.
    Lattice {
        #[arg(value_enum)]
        action: LatticeAction,
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        #[arg(long)]
        class: Option<String>,
        #[arg(short = 'p', value_parser = clap::value_parser!(i64).range(2..=4))]
        p: Option<i64>,
    },
    /// Recompute the printed tables and compare cell by cell.
    Verify {
        #[arg(long)]
        table: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeAction {
    Disc,
    Group,
    Divisible,
    Adjoin,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_group(s: &str) -> Result<GroupLabel, String> {
    s.parse().map_err(|e: bipoly_k3::groups::GroupError| e.to_string())
}

fn parse_degree(s: &str) -> Result<u32, String> {
    match s {
        "6" => Ok(6),
        "8" => Ok(8),
        _ => Err(format!("degree must be 6 or 8, got {s}")),
    }
}

fn parse_fiber(s: &str) -> Result<Fiber, String> {
    s.parse()
        .map_err(|e: bipoly_k3::singularities::SingularityError| e.to_string())
}

/// Errors the CLI reports with exit code 2.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Config {
        path: String,
        source: bipoly_k3::error::ConfigError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

fn read_config(path: &Path) -> Result<ConfigFile, CliError> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: p.clone(),
        source,
    })?;
    parse_config(&text).map_err(|source| CliError::Config { path: p, source })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let overrides: Vec<NodeOrbitRecord> = match &cli.nodes {
        Some(p) => read_config(p)?.nodes,
        None => Vec::new(),
    };
    let nodes = merge_nodes(&overrides);
    let out = |t: Table| print!("{}", t.render(cli.format));
    match &cli.command {
        Command::Groups => out(groups_table()),
        Command::Orbits { group, degree } => {
            for t in orbits_tables(*group, *degree)? {
                out(t);
            }
        }
        Command::Fixlines { group } => out(fixlines_table(*group)?),
        Command::Sing { group, fiber } => {
            let parts = fiber_singularities(*group, *fiber, &nodes).map_err(Error::from)?;
            let mut t = Table::new(["source", "singularities", "curves"]);
            for (name, r) in ["quadric", "off-quadric", "nodes"].iter().zip(&parts) {
                t.push([name.to_string(), r.to_string(), r.rank().to_string()]);
            }
            out(t);
        }
        Command::Nu { group, degree, fiber } => {
            let n = nu_totals(*group, *degree, *fiber, &nodes).map_err(Error::from)?;
            let mut t = Table::new(["group", "fiber", "nu1", "nu2", "nu3", "nu4", "nu"]);
            let (a, b, c, d, total) = n.as_tuple();
            t.push([
                group.to_string(),
                fiber.to_string(),
                a.to_string(),
                b.to_string(),
                c.to_string(),
                d.to_string(),
                total.to_string(),
            ]);
            out(t);
        }
        Command::Lattice { action, file, class, p } => out(lattice_table(*action, file, class.as_deref(), *p)?),
        Command::Verify { table } => {
            let report = run_verification(&Scope::parse(table.as_deref()), &nodes)?;
            out(report.table());
            eprintln!(
                "{} cells, {} passed, {} failed",
                report.cells.len(),
                report.passed(),
                report.failed()
            );
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn groups_table() -> Table {
    let mut t = Table::new([
        "label",
        "name",
        "order",
        "projective",
        "parent",
        "index",
        "normal",
        "degree",
        "generators",
    ]);
    for g in GroupLabel::ALL {
        let h = g.group();
        let (parent, index, normal) = match g.parent() {
            Some(p) => {
                let big = p.group();
                let index = h
                    .index_in(&big)
                    .map(|i| i.to_string())
                    .unwrap_or_else(|e| e.to_string());
                (p.as_str(), index, if h.is_normal_in(&big) { "yes" } else { "no" })
            }
            None => ("-", "-".into(), "-"),
        };
        let degree = if g.parent().is_some() {
            g.degree().to_string()
        } else {
            "-".into()
        };
        t.push([
            g.as_str().to_string(),
            g.display_name().to_string(),
            h.order().to_string(),
            h.projective().order().to_string(),
            parent.to_string(),
            index,
            normal.to_string(),
            degree,
            g.generator_names().join(" "),
        ]);
    }
    t
}

fn orbits_tables(g: GroupLabel, degree: Option<u32>) -> Result<Vec<Table>, CliError> {
    let pg = g.group().projective();
    let mut rulings = Table::new(["side", "fixing order", "length"]);
    for side in [Side::Left, Side::Right] {
        for o in ruling_orbits(&pg, side) {
            rulings.push([
                side.as_str().to_string(),
                o.fixing_order.to_string(),
                o.len().to_string(),
            ]);
        }
    }
    let mut tables = vec![rulings];
    if let Some(d) = degree {
        let mut base = Table::new(["left orbit", "right orbit", "point orbit lengths"]);
        let pairs = base_point_orbits(&pg, d).map_err(Error::from)?;
        let base_locus = bipoly_k3::geometry::base_locus(d).map_err(Error::from)?;
        let right = bipoly_k3::geometry::orbits(&pg, &base_locus.right).len().max(1);
        for (i, lengths) in pairs.iter().enumerate() {
            let l: Vec<String> = lengths.iter().map(ToString::to_string).collect();
            base.push([(i / right + 1).to_string(), (i % right + 1).to_string(), l.join(",")]);
        }
        tables.push(base);
        let mut quad = Table::new(["fix", "base side", "length", "number"]);
        for r in quadric_points(&pg, d).map_err(Error::from)? {
            quad.push([
                format!("Z{}xZ{}", r.left_fix, r.right_fix),
                r.base_side.as_str().to_string(),
                r.length.to_string(),
                r.number.to_string(),
            ]);
        }
        tables.push(quad);
    }
    Ok(tables)
}

fn fixlines_table(g: GroupLabel) -> Result<Table, CliError> {
    let mut t = Table::new([
        "class",
        "representative",
        "F",
        "length",
        "ratio",
        "points",
        "orbits",
        "sing",
    ]);
    match analyze(g) {
        Ok(a) => {
            for c in &a.classes {
                let (orbits, sing) = match (c.orbit_count(), c.singularities()) {
                    (Ok(n), Ok(s)) => (n.to_string(), s.to_string()),
                    (Err(e), _) | (_, Err(e)) => (format!("error: {e}"), "-".into()),
                };
                t.push([
                    c.label.clone(),
                    format!("({},{})", c.representative.0, c.representative.1),
                    format!("Z{}", c.fix_order()),
                    c.class.length().to_string(),
                    c.class.ratio().to_string(),
                    c.points_off_quadric.to_string(),
                    orbits,
                    sing,
                ]);
            }
        }
        Err(_) => {
            // O×O has no pencil of its own; list the classes without names or points.
            let pg = g.group().projective();
            for c in fixline_classes(&pg) {
                let points = points_off_quadric(c.rep(), g.degree())
                    .map(|n| n.to_string())
                    .unwrap_or_default();
                t.push([
                    "-".to_string(),
                    "-".to_string(),
                    format!("Z{}", c.fix_order()),
                    c.length().to_string(),
                    c.ratio().to_string(),
                    points,
                    "-".to_string(),
                    "-".to_string(),
                ]);
            }
        }
    }
    Ok(t)
}

fn lattice_table(action: LatticeAction, file: &Path, class: Option<&str>, p: Option<i64>) -> Result<Table, CliError> {
    let cfg = read_config(file)?;
    let l = cfg.graph.to_lattice();
    let lattice_err = |e: bipoly_k3::error::LatticeError| CliError::Core(e.into());
    let class_and_p = || -> Result<(&bipoly_k3::lattices::DivisorClass, i64), CliError> {
        let name = class.ok_or_else(|| CliError::Usage("--class is required".into()))?;
        let v = cfg
            .class(name)
            .ok_or_else(|| CliError::Usage(format!("no class {name} in {}", file.display())))?;
        Ok((v, p.ok_or_else(|| CliError::Usage("-p is required".into()))?))
    };
    let mut t;
    match action {
        LatticeAction::Disc => {
            let d = discriminant(&l).map_err(lattice_err)?;
            t = Table::new(["rank", "discriminant", "factored"]);
            t.push([l.rank().to_string(), d.to_string(), format_factored(d)]);
        }
        LatticeAction::Group => {
            let g = discriminant_group(&l).map_err(lattice_err)?;
            t = Table::new(["rank", "order", "group", "2-rank", "3-rank"]);
            t.push([
                l.rank().to_string(),
                g.order().to_string(),
                g.to_string(),
                g.p_rank(2).to_string(),
                g.p_rank(3).to_string(),
            ]);
        }
        LatticeAction::Divisible => {
            let (v, p) = class_and_p()?;
            let div = is_p_divisible(&l, v, p).map_err(lattice_err)?;
            let nik = nikulin_count_check(&l, v, p).map_err(lattice_err)?;
            t = Table::new(["class", "p", "divisible", "support", "nikulin"]);
            t.push([
                class.unwrap_or_default().to_string(),
                p.to_string(),
                if div { "yes" } else { "no" }.to_string(),
                v.support().len().to_string(),
                if nik { "pass" } else { "fail" }.to_string(),
            ]);
        }
        LatticeAction::Adjoin => {
            let (v, p) = class_and_p()?;
            let before = discriminant(&l).map_err(lattice_err)?;
            let w = adjoin_class(&l, v, p).map_err(lattice_err)?;
            let after = discriminant(&w).map_err(lattice_err)?;
            t = Table::new(["class", "p", "d(W)", "d(W')", "index"]);
            t.push([
                class.unwrap_or_default().to_string(),
                p.to_string(),
                format_factored(before),
                format_factored(after),
                p.to_string(),
            ]);
        }
    }
    Ok(t)
}
