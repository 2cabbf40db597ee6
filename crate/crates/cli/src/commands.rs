use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use chipfire::sample::{connected_sample, random_tree};
use chipfire::sandpile::{char_poly_restricted, Jacobian};
use chipfire::theorems::{
    verify_cone_theorem, verify_eigenvectors, verify_join_theorem, verify_tree_bound,
};
use chipfire::{Error, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::output::{
    ConePayload, EigenPayload, GroupPayload, JoinPayload, OutputRecord, Payload, SamplePayload,
    TreePayload,
};
use crate::Which;

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Graph(Option<PathBuf>, Error),
}

impl CliError {
    /// 2 for unreadable or malformed input, 3 for violated preconditions.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) | CliError::Graph(_, Error::Parse { .. }) => 2,
            CliError::Graph(..) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, err) => write!(f, "{}: {err}", path.display()),
            CliError::Graph(Some(path), err) => write!(f, "{}: {err}", path.display()),
            CliError::Graph(None, err) => write!(f, "{err}"),
        }
    }
}

impl CliError {
    fn in_file(self, path: &Path) -> Self {
        match self {
            CliError::Graph(None, err) => CliError::Graph(Some(path.to_owned()), err),
            other => other,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Graph(None, err)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Context {
    pub cone: Option<usize>,
    pub remove_vertex: Option<usize>,
    pub seed: u64,
}

impl Context {
    fn load(&self, path: &Path) -> Result<Graph> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_owned(), e))?;
        let at = |e| CliError::Graph(Some(path.to_owned()), e);
        let graph = Graph::parse_edge_list(&text).map_err(at)?;
        match self.cone {
            Some(n) => graph.cone(n).map_err(at),
            None => Ok(graph),
        }
    }

    fn group_payload(&self, g: &Graph) -> Result<GroupPayload> {
        let removed = self.remove_vertex.unwrap_or(0);
        let jacobian = Jacobian::with_removed_vertex(g, removed)?;
        let poly = char_poly_restricted(g)?;
        Ok(GroupPayload::new(
            g.vertex_count(),
            g.edge_count(),
            removed,
            jacobian.group(),
            jacobian.group().order(),
            &poly,
        ))
    }

    pub fn group(&self, file: &Path) -> Result<OutputRecord> {
        let g = self.load(file)?;
        Ok(OutputRecord {
            command: "group".into(),
            input_summary: summary(file, &g),
            result: Payload::Group(self.group_payload(&g).map_err(|e| e.in_file(file))?),
        })
    }

    pub fn cone(&self, file: &Path, n: usize) -> Result<OutputRecord> {
        let base = self.load(file)?;
        let g = base.cone(n)?;
        Ok(OutputRecord {
            command: "cone".into(),
            input_summary: format!("{}, cone n={n}", summary(file, &base)),
            result: Payload::Group(self.group_payload(&g).map_err(|e| e.in_file(file))?),
        })
    }

    pub fn join(&self, files: &[PathBuf]) -> Result<OutputRecord> {
        let graphs = files
            .iter()
            .map(|f| self.load(f))
            .collect::<Result<Vec<_>>>()?;
        let g = Graph::join_all(&graphs)?;
        Ok(OutputRecord {
            command: "join".into(),
            input_summary: join_summary(files, &graphs),
            result: Payload::Group(self.group_payload(&g)?),
        })
    }

    /// Files are checked concurrently; records come back in input order.
    pub fn verify(&self, files: &[PathBuf], n: usize, which: Which) -> Vec<Result<OutputRecord>> {
        if which == Which::Join {
            return vec![self.verify_join(files)];
        }
        std::thread::scope(|scope| {
            let handles: Vec<_> = files
                .iter()
                .map(|file| scope.spawn(move || self.verify_one(file, n, which)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification thread panicked"))
                .collect()
        })
    }

    fn verify_one(&self, file: &Path, n: usize, which: Which) -> Result<OutputRecord> {
        let g = self.load(file)?;
        let at = |e| CliError::Graph(Some(file.to_owned()), e);
        let result = match which {
            Which::Cone => Payload::Cone(cone_payload(&g, n).map_err(at)?),
            Which::Tree => {
                let r = verify_tree_bound(&g, n).map_err(at)?;
                Payload::Tree(TreePayload {
                    cone_size: n,
                    leaf_count: r.leaf_count,
                    h_generators: r.h_generators,
                    holds: r.holds,
                })
            }
            Which::Eigen => Payload::Eigen(EigenPayload {
                cone_size: n,
                eigenvalue: n + g.vertex_count(),
                holds: verify_eigenvectors(&g, n).map_err(at)?,
            }),
            Which::Join => unreachable!("join verification spans all files"),
        };
        Ok(OutputRecord {
            command: format!("verify {}", which_name(which)),
            input_summary: format!("{}, n={n}", summary(file, &g)),
            result,
        })
    }

    fn verify_join(&self, files: &[PathBuf]) -> Result<OutputRecord> {
        let graphs = files
            .iter()
            .map(|f| self.load(f))
            .collect::<Result<Vec<_>>>()?;
        let r = verify_join_theorem(&graphs)?;
        Ok(OutputRecord {
            command: "verify join".into(),
            input_summary: join_summary(files, &graphs),
            result: Payload::Join(JoinPayload {
                factor_vertex_counts: r.factor_vertex_counts,
                total_vertices: r.total_vertices,
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
                holds: r.holds,
            }),
        })
    }

    pub fn sample(&self, which: Which, count: usize, max_vertices: usize, max_n: usize) -> Result<OutputRecord> {
        if max_vertices == 0 || max_n == 0 || self.cone == Some(0) {
            return Err(Error::Input("sample and cone sizes must be positive".into()).into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let cones = |g: &Graph| -> Vec<Graph> {
            match self.cone {
                Some(c) => vec![g.cone(c).expect("cone size is positive")],
                None => vec![g.clone()],
            }
        };

        let mut instances = 0;
        let mut failures = 0;
        let mut non_split = 0;
        match which {
            Which::Join => {
                for _ in 0..count {
                    let l = rng.gen_range(2..=3);
                    let graphs: Vec<Graph> = (0..l)
                        .flat_map(|_| connected_sample(&mut rng, 1, max_vertices))
                        .flat_map(|g| cones(&g))
                        .collect();
                    instances += 1;
                    failures += usize::from(!verify_join_theorem(&graphs)?.holds);
                }
            }
            Which::Tree => {
                for _ in 0..count {
                    let vertices = rng.gen_range(2..=max_vertices.max(2));
                    let tree = random_tree(&mut rng, vertices);
                    for n in 1..=max_n {
                        instances += 1;
                        failures += usize::from(!verify_tree_bound(&tree, n)?.holds);
                    }
                }
            }
            Which::Cone | Which::Eigen => {
                let graphs: Vec<Graph> = connected_sample(&mut rng, count, max_vertices)
                    .iter()
                    .flat_map(cones)
                    .collect();
                for g in &graphs {
                    for n in 1..=max_n {
                        instances += 1;
                        let ok = if which == Which::Cone {
                            let r = verify_cone_theorem(g, n)?;
                            non_split += usize::from(!r.splits);
                            r.holds()
                        } else {
                            verify_eigenvectors(g, n)?
                        };
                        failures += usize::from(!ok);
                    }
                }
            }
        }

        Ok(OutputRecord {
            command: format!("sample {}", which_name(which)),
            input_summary: format!("seed {}, {count} graphs on <= {max_vertices} vertices", self.seed),
            result: Payload::Sample(SamplePayload {
                which: which_name(which).into(),
                seed: self.seed,
                graphs: count,
                max_vertices,
                max_cone_size: max_n,
                instances,
                failures,
                non_split: (which == Which::Cone).then_some(non_split),
                holds: failures == 0,
            }),
        })
    }
}

fn cone_payload(g: &Graph, n: usize) -> chipfire::Result<ConePayload> {
    let r = verify_cone_theorem(g, n)?;
    Ok(ConePayload {
        base_vertices: r.base_vertices,
        cone_size: r.cone_size,
        pic0: (&r.pic0).into(),
        subgroup: (&r.subgroup).into(),
        quotient_h: (&r.quotient_h).into(),
        p_at_minus_n: r.p_at_minus_n.to_string(),
        order_formula_holds: r.order_formula_holds,
        subgroup_is_expected: r.subgroup_is_expected,
        size_formula_holds: r.size_formula_holds(),
        splits: r.splits,
        h_generator_count: r.h_generator_count,
        holds: r.holds(),
    })
}

fn which_name(which: Which) -> &'static str {
    match which {
        Which::Cone => "cone",
        Which::Tree => "tree",
        Which::Join => "join",
        Which::Eigen => "eigen",
    }
}

fn summary(file: &Path, g: &Graph) -> String {
    format!(
        "{} (n={}, m={})",
        file.display(),
        g.vertex_count(),
        g.edge_count()
    )
}

fn join_summary(files: &[PathBuf], graphs: &[Graph]) -> String {
    files
        .iter()
        .zip(graphs)
        .map(|(f, g)| summary(f, g))
        .collect::<Vec<_>>()
        .join(" * ")
}
