use std::collections::BTreeSet;

use clap::{ArgGroup, Args, ValueEnum};
use serde_json::{json, Map};
use sixvertex::oracle::{
    ambjorn_budd_fibers, colourful_quadrangulations, count_euler_orientations, count_partial_orientations,
    dual_labelling, enumerate_maps, euler_orientations, labelled_maps, partial_orientations, EdgeState, RootedMap,
};
use sixvertex::{Error, Result};

use crate::report::{Entry, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Eo,
    Partial,
    Labelled,
    Bijections,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("size").required(true).args(["edges", "vertices"])))]
pub struct OracleArgs {
    /// planar maps with this many edges
    #[arg(long)]
    edges: Option<usize>,
    /// quartic maps with this many vertices
    #[arg(long)]
    vertices: Option<usize>,
    #[arg(long, value_enum)]
    mode: Mode,
    /// list every object counted
    #[arg(long)]
    dump: bool,
}

fn orientation_string(out: &[bool]) -> String {
    out.iter().map(|&o| if o { '>' } else { '<' }).collect()
}

fn maps(a: &OracleArgs) -> Result<(Vec<RootedMap>, usize)> {
    match (a.edges, a.vertices) {
        (Some(e), _) => Ok((enumerate_maps(e, false)?, e)),
        (None, Some(v)) => Ok((enumerate_maps(2 * v, true)?, v)),
        (None, None) => Err(Error::BadParameter("give --edges or --vertices".into())),
    }
}

pub fn run(a: OracleArgs) -> Result<Report> {
    let mut params = Map::new();
    params.insert("edges".into(), json!(a.edges));
    params.insert("vertices".into(), json!(a.vertices));
    params.insert("mode".into(), json!(format!("{:?}", a.mode).to_lowercase()));
    params.insert("dump".into(), json!(a.dump));
    let mut report = Report::new("oracle", params);
    let (ms, size) = maps(&a)?;
    match a.mode {
        Mode::Eo => {
            let mut data = json!({ "maps": ms.len(), "polynomial": count_euler_orientations(&ms).to_string() });
            if a.dump {
                let items: Vec<String> = ms
                    .iter()
                    .flat_map(|m| {
                        euler_orientations(m)
                            .into_iter()
                            .map(move |o| format!("{} out={}", m.dump(), orientation_string(&o.out)))
                    })
                    .collect();
                data["dump"] = json!(items);
            }
            report.results.push(Entry::new("eulerian_orientations", "sum over orientations of g^alternating", true, data));
        }
        Mode::Partial => {
            let mut data = json!({ "maps": ms.len(), "polynomial": count_partial_orientations(&ms).to_string() });
            if a.dump {
                let items: Vec<String> = ms
                    .iter()
                    .flat_map(|m| {
                        partial_orientations(m).into_iter().map(move |p| {
                            let s: String = p
                                .state
                                .iter()
                                .map(|s| match s {
                                    EdgeState::Forward => '>',
                                    EdgeState::Backward => '<',
                                    EdgeState::Undirected => '-',
                                })
                                .collect();
                            format!("{} edges={s}", m.dump())
                        })
                    })
                    .collect();
                data["dump"] = json!(items);
            }
            report.results.push(Entry::new("partial_orientations", "sum over partial orientations of g^undirected", true, data));
        }
        Mode::Labelled => {
            if a.vertices.is_some() {
                return Err(Error::BadParameter("labelled mode takes --edges".into()));
            }
            let ls = labelled_maps(size)?;
            let mut data = json!({ "labelled_maps": ls.len() });
            if a.dump {
                let items: Vec<String> = ls.iter().map(|l| format!("{} labels={:?}", l.map.dump(), l.labels)).collect();
                data["dump"] = json!(items);
            }
            report.results.push(Entry::new("labelled_maps", "maps with labels differing by 1 on edges", true, data));
        }
        Mode::Bijections => {
            if a.vertices.is_some() {
                return Err(Error::BadParameter("bijections mode takes --edges".into()));
            }
            let targets: BTreeSet<_> = labelled_maps(size)?.into_iter().collect();
            let mut images = BTreeSet::new();
            let mut total = 0usize;
            for m in &ms {
                for o in euler_orientations(m) {
                    images.insert(dual_labelling(&o)?);
                    total += 1;
                }
            }
            report.results.push(Entry::new(
                "dual_labelling",
                "heights give a bijection onto labelled maps",
                images.len() == total && images == targets,
                json!({ "orientations": total, "images": images.len(), "labelled_maps": targets.len() }),
            ));
            let colourful = colourful_quadrangulations(size)?.len();
            let fib = ambjorn_budd_fibers(size)?;
            let sizes: BTreeSet<usize> = fib.values().copied().collect();
            let keys: BTreeSet<_> = fib.keys().cloned().collect();
            let mut data = json!({ "colourful": colourful, "targets": keys.len(), "fiber_sizes": sizes });
            if a.dump {
                let items: Vec<String> =
                    fib.iter().map(|(l, c)| format!("{} labels={:?} fiber={c}", l.map.dump(), l.labels)).collect();
                data["dump"] = json!(items);
            }
            report.results.push(Entry::new(
                "two_to_one",
                "colourful quadrangulations map 2-to-1 onto labelled maps",
                keys == targets && sizes.iter().all(|&s| s == 2),
                data,
            ));
        }
    }
    Ok(report)
}
