use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use srd_core::coherent::{
    detect_type, parse_matrix_text, wl_closure, write_matrix_text, CoherentConfiguration,
    Designation, FiberPick, MatrixInput, Pick,
};
use srd_core::feasibility::{
    check_params, enumerate_feasible, format_table, Bounds, CheckOptions, RouteSelection, Variant,
};
use srd_core::srd::{
    audit_table, gen_example, incidence_designation, relabel_and_extract, ExampleName, SrdParams,
};
use srd_core::{Error, Integer, Report};

#[derive(Parser)]
#[command(
    name = "srd",
    version,
    about = "Exact checks for strongly regular designs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a parameter tuple against the feasibility equations and routes
    CheckParams {
        params: PathBuf,
        #[arg(long, value_enum, default_value_t = Eq15::Corrected)]
        eq15: Eq15,
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
        #[arg(long)]
        json: bool,
    },
    /// Coherent closure of a matrix file (`-` or no file reads stdin)
    Closure {
        file: Option<PathBuf>,
        #[arg(long)]
        extract: bool,
        /// Run the full parameter check on the extracted tuple (implies --extract)
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        designation: DesignationArgs,
    },
    /// List feasible parameter tuples up to the given fiber sizes
    Enumerate {
        #[arg(long)]
        max_n1: i64,
        #[arg(long)]
        max_n2: i64,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
    },
    /// Compare the transcribed multiplication table with derived coefficients
    AuditTable {
        params: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a bundled example matrix
    Example {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Eq15 {
    Corrected,
    AsPrinted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    All,
    Equations,
    Intersection,
    Regrep,
    Characters,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fiber {
    First,
    Second,
}

#[derive(Args)]
struct DesignationArgs {
    /// Which declared fiber becomes fiber 1
    #[arg(long, value_enum, default_value_t = Fiber::First)]
    fiber1: Fiber,
    /// smaller | larger | color:N | cell:R,C
    #[arg(long, value_parser = parse_pick)]
    sigma2: Option<Pick>,
    #[arg(long, value_parser = parse_pick)]
    sigma5: Option<Pick>,
    /// Defaults to the color of the first incident pair
    #[arg(long, value_parser = parse_pick)]
    sigma7: Option<Pick>,
}

fn parse_pick(s: &str) -> Result<Pick, String> {
    let num = |t: &str| usize::from_str(t.trim()).map_err(|e| format!("'{t}': {e}"));
    match s {
        "smaller" => Ok(Pick::SmallerValency),
        "larger" => Ok(Pick::LargerValency),
        _ => {
            if let Some(c) = s.strip_prefix("color:") {
                Ok(Pick::Color(num(c)?))
            } else if let Some(rc) = s.strip_prefix("cell:") {
                let (r, c) = rc.split_once(',').ok_or("cell needs R,C")?;
                Ok(Pick::ContainingCell(num(r)?, num(c)?))
            } else {
                Err(format!("unknown pick '{s}'"))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn verdict_code(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn read_path(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn read_params(path: &PathBuf) -> Result<SrdParams, Error> {
    SrdParams::from_json(&read_path(path)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::CheckParams {
            params,
            eq15,
            route,
            json,
        } => {
            let p = read_params(&params)?;
            let opts = CheckOptions {
                variant15: match eq15 {
                    Eq15::Corrected => Variant::Corrected,
                    Eq15::AsPrinted => Variant::AsPrinted,
                },
                routes: match route {
                    Route::All => RouteSelection::All,
                    Route::Equations => RouteSelection::Equations,
                    Route::Intersection => RouteSelection::Intersection,
                    Route::Regrep => RouteSelection::RegRep,
                    Route::Characters => RouteSelection::Characters,
                },
                labeling: None,
            };
            let report: Report = check_params::<Integer>(&p, &opts);
            if json {
                print_json(&serde_json::to_value(&report).expect("serializable"));
            } else {
                println!("{report}");
            }
            Ok(verdict_code(report.passed()))
        }
        Command::Closure {
            file,
            extract,
            check,
            json,
            designation,
        } => closure(file, extract || check, check, json, &designation),
        Command::Enumerate {
            max_n1,
            max_n2,
            json,
            table: _,
        } => {
            if max_n1 < 0 || max_n2 < 0 {
                return Err(Error::Input("bounds must be non-negative".into()));
            }
            let rows = enumerate_feasible(Bounds { max_n1, max_n2 });
            if json {
                let reports: Vec<Value> = rows
                    .iter()
                    .map(|p| {
                        let r: Report = check_params::<Integer>(p, &CheckOptions::default());
                        serde_json::to_value(&r).expect("serializable")
                    })
                    .collect();
                print_json(&json!({
                    "bounds": { "max_n1": max_n1, "max_n2": max_n2 },
                    "count": rows.len(),
                    "tuples": reports,
                }));
            } else {
                print!("{}", format_table(&rows));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::AuditTable { params, json } => {
            let p = read_params(&params)?;
            let audit = audit_table(&p);
            if json {
                print_json(&serde_json::to_value(&audit).expect("serializable"));
            } else {
                println!("parameters: {}", audit.params);
                println!(
                    "{} listed products agree, {} coefficients differ",
                    audit.agreeing_products.len(),
                    audit.discrepancies.len()
                );
                for d in &audit.discrepancies {
                    let (i, j, k) = d.entry;
                    println!(
                        "  σ{i}σ{j}, coefficient of σ{k}: transcribed {} = {}, derived {} = {}",
                        d.transcribed, d.transcribed_value, d.derived, d.derived_value
                    );
                }
                for n in &audit.notes {
                    println!("note: {n}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Example { name, output } => {
            let text = write_matrix_text(&gen_example(name.parse::<ExampleName>()?));
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?,
                None => {
                    let _ = io::stdout().write_all(text.as_bytes());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn designation_for(input: &MatrixInput, args: &DesignationArgs) -> Designation {
    let mut d = match input {
        MatrixInput::Incidence(m) => incidence_designation(m),
        MatrixInput::Adjacency(_) => Designation::default(),
    };
    if let Fiber::Second = args.fiber1 {
        d.fiber1 = FiberPick::Second;
        if let Pick::ContainingCell(r, c) = d.sigma7 {
            d.sigma7 = Pick::ContainingCell(c, r);
        }
    }
    if let Some(p) = args.sigma2 {
        d.sigma2 = p;
    }
    if let Some(p) = args.sigma5 {
        d.sigma5 = p;
    }
    if let Some(p) = args.sigma7 {
        d.sigma7 = p;
    }
    d
}

fn closure(
    file: Option<PathBuf>,
    extract: bool,
    check: bool,
    json: bool,
    args: &DesignationArgs,
) -> Result<ExitCode, Error> {
    let text = match file.as_ref().filter(|p| p.as_os_str() != "-") {
        Some(p) => read_path(p)?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("stdin: {e}")))?;
            s
        }
    };
    let input = parse_matrix_text(&text)?;
    let closed = wl_closure(&CoherentConfiguration::from_input(&input)?);
    let ty = detect_type(&closed)?;
    let (n1, n2) = closed.fiber_sizes();

    let mut out = json!({
        "vertices": closed.order(),
        "declared_fibers": [n1, n2],
        "colors": closed.color_count(),
        "type": ty.to_string(),
        "type_counts": ty.counts,
    });
    if !json {
        println!("vertices: {} ({n1} + {n2})", closed.order());
        println!("colors: {}", closed.color_count());
        println!("type: {ty}");
    }
    if !extract {
        if json {
            print_json(&out);
        }
        return Ok(ExitCode::SUCCESS);
    }

    let designation = designation_for(&input, args);
    let (params, _, record) = relabel_and_extract(&closed, &designation)?;
    out["params"] = params.to_json();
    out["relabel"] = serde_json::to_value(&record).expect("serializable");
    if !json && !check {
        println!("parameters: {params}");
    }
    let mut pass = true;
    if check {
        let report: Report = check_params::<Integer>(&params, &CheckOptions::default());
        pass = report.passed();
        out["report"] = serde_json::to_value(&report).expect("serializable");
        if !json {
            println!("{report}");
        }
    }
    if json {
        print_json(&out);
    }
    Ok(verdict_code(pass))
}
