use std::path::Path;

use resreg_core::graph::{cartesian_k2, double_graph, generate, lexicographic_k2, parse_edge_list, parse_graph6_corpus};
use resreg_core::{FamilySpec, Graph};

use crate::args::{CommonArgs, InputFormat, Product};
use crate::CliError;

/// A single graph to work on, with the factor it was built from.
pub struct Loaded {
    pub factor: Graph,
    pub product: Option<Product>,
    pub graph: Graph,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// A graph tagged with its input line; unreadable lines keep their error.
pub type Numbered = (usize, Result<Graph, CliError>);

/// Every graph of the input; a family or edge list is line 1.
pub fn load_many(args: &CommonArgs) -> Result<Vec<Numbered>, CliError> {
    match (&args.family, &args.input, args.format) {
        (Some(_), _, _) | (None, Some(_), InputFormat::Edgelist) => Ok(vec![(1, load_plain(args))]),
        (None, Some(path), InputFormat::Graph6) => {
            let name = file_name(path);
            Ok(parse_graph6_corpus(&read(path)?)
                .into_iter()
                .map(|(line, g)| {
                    let g = g.map(|g| g.with_label(format!("{name}:{line}"))).map_err(CliError::from);
                    (line, g)
                })
                .collect())
        }
        (None, None, _) => Err(CliError::Usage("give --input or --family".into())),
    }
}

fn load_plain(args: &CommonArgs) -> Result<Graph, CliError> {
    if let Some(spec) = &args.family {
        let spec: FamilySpec = spec.parse()?;
        return Ok(generate(&spec)?.with_label(spec.to_string()));
    }
    let path = args.input.as_ref().ok_or_else(|| CliError::Usage("give --input or --family".into()))?;
    match args.format {
        InputFormat::Edgelist => Ok(parse_edge_list(&read(path)?)?.with_label(file_name(path))),
        InputFormat::Graph6 => {
            let mut graphs = load_many(args)?;
            let (line, g) = match (args.line, graphs.len()) {
                (Some(want), _) => graphs
                    .into_iter()
                    .find(|(line, _)| *line == want)
                    .ok_or_else(|| CliError::Usage(format!("{} has no graph on line {want}", path.display())))?,
                (None, 1) => graphs.remove(0),
                (None, count) => {
                    return Err(CliError::Usage(format!(
                        "{} holds {count} graphs; pick one with --line",
                        path.display()
                    )))
                }
            };
            g.map_err(|e| CliError::Usage(format!("line {line}: {e}")))
        }
    }
}

pub fn apply_product(g: &Graph, product: Product) -> Result<Graph, CliError> {
    Ok(match product {
        Product::Double => double_graph(g)?,
        Product::LexicoK2 => lexicographic_k2(g)?,
        Product::CartesianK2 => cartesian_k2(g)?,
    })
}

pub fn load_single(args: &CommonArgs) -> Result<Loaded, CliError> {
    let factor = load_plain(args)?;
    let graph = match args.product {
        Some(p) => apply_product(&factor, p)?,
        None => factor.clone(),
    };
    Ok(Loaded { factor, product: args.product, graph })
}
