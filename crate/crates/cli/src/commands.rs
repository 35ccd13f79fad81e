use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use multistar::bounds::{
    cycle_family_lower_bound, degeneracy_order, face_bound_harmonic, face_bound_log,
    parse_cycles_file, parse_order_file, stahl_bound, CycleFamilyBound, OrderingReport,
};
use multistar::enumerate::brute_force_distribution;
use multistar::graph::families::dipole_chain;
use multistar::montecarlo::shard_seed;
use multistar::multistar::{
    interval_check, interval_scan, multistar_face_distribution, reduce_partition, IntervalReport,
};
use multistar::partition::{conj_class_size, partition_counts};
use multistar::rational::{decimal, format_sig};
use multistar::{
    monte_carlo_faces, BigRational, Error, FaceDistribution, Multigraph, Partition, Result,
};

use crate::{Format, RunConfig, CONJECTURE_SCAN_LIMIT, INTERVAL_SCAN_LIMIT};

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    Multigraph::parse_edge_list(&read_file(path)?)
}

fn fraction_and_decimal(r: &BigRational) -> String {
    format!("{r} ({})", decimal(r))
}

fn json_out(config: &RunConfig, result: impl Serialize) -> String {
    let doc = json!({ "config": config, "result": result });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct DistributionJson {
    total: String,
    expectation: String,
    expectation_decimal: String,
    rows: Vec<multistar::distribution::DistributionRow>,
}

fn distribution_json(d: &FaceDistribution) -> DistributionJson {
    let e = d.expectation();
    DistributionJson {
        total: d.total().to_string(),
        expectation: e.to_string(),
        expectation_decimal: decimal(&e),
        rows: d.rows(),
    }
}

fn distribution_table(d: &FaceDistribution) -> String {
    let mut out = String::new();
    let rows = d.rows();
    let wc = rows.iter().map(|r| r.count.len()).max().unwrap_or(0).max(5);
    let wp = rows
        .iter()
        .map(|r| r.probability.len())
        .max()
        .unwrap_or(0)
        .max(11);
    writeln!(
        out,
        "{:>5}  {:>wc$}  {:>wp$}  decimal",
        "faces", "count", "probability"
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{:>5}  {:>wc$}  {:>wp$}  {}",
            r.faces, r.count, r.probability, r.decimal
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct ExactJson {
    partition: Partition,
    n: usize,
    reduced_partition: Partition,
    reduced_n: usize,
    leaves: usize,
    class_size: String,
    distribution: DistributionJson,
    interval: Option<IntervalReport>,
}

pub fn exact(config: &RunConfig, text: &str) -> Result<String> {
    let lambda: Partition = text.parse()?;
    let spec = reduce_partition(&lambda);
    let dist = if spec.reduced.is_empty() {
        FaceDistribution::point_mass(1, 1u32.into())?
    } else {
        multistar_face_distribution(&lambda)?
    };
    let interval = if spec.reduced_n() >= 2 {
        Some(interval_check(&lambda)?)
    } else {
        None
    };
    let class_size = if spec.reduced.is_empty() {
        1u32.into()
    } else {
        conj_class_size(&lambda)
    };
    let e = dist.expectation();
    Ok(match config.format {
        Format::Json => json_out(
            config,
            ExactJson {
                partition: lambda.clone(),
                n: spec.n(),
                reduced_partition: spec.reduced.clone(),
                reduced_n: spec.reduced_n(),
                leaves: spec.leaves,
                class_size: class_size.to_string(),
                distribution: distribution_json(&dist),
                interval,
            },
        ),
        Format::Csv => dist.to_csv(),
        Format::Table => {
            let mut out = String::new();
            writeln!(
                out,
                "partition     {} ({})",
                lambda,
                lambda.to_exponent_string()
            )
            .unwrap();
            writeln!(
                out,
                "edges         n = {}, reduced n' = {} ({} leaves)",
                spec.n(),
                spec.reduced_n(),
                spec.leaves
            )
            .unwrap();
            writeln!(out, "class size    {class_size}").unwrap();
            out.push('\n');
            out.push_str(&distribution_table(&dist));
            out.push('\n');
            writeln!(out, "E[F]          {}", fraction_and_decimal(&e)).unwrap();
            match &interval {
                Some(r) => {
                    writeln!(
                        out,
                        "{:<14}{}",
                        format!("Delta_{}", r.reduced_n),
                        fraction_and_decimal(&r.delta)
                    )
                    .unwrap();
                    writeln!(out, "gap           {}", fraction_and_decimal(&r.gap)).unwrap();
                    writeln!(out, "half-width    {}", fraction_and_decimal(&r.half_width)).unwrap();
                    writeln!(out, "inside        {}", r.inside).unwrap();
                }
                None => writeln!(out, "interval      not applicable (n' < 2: a tree)").unwrap(),
            }
            out
        }
    })
}

#[derive(Serialize)]
struct UpperBounds {
    ordering: OrderingReport,
    harmonic: String,
    harmonic_decimal: String,
    log: String,
    stahl: String,
}

fn upper_bounds(g: &Multigraph, order: Option<OrderingReport>) -> Result<UpperBounds> {
    let order = match order {
        Some(o) => o,
        None => degeneracy_order(g)?,
    };
    let harmonic = face_bound_harmonic(g, &order)?;
    let log = face_bound_log(g, &order)?;
    Ok(UpperBounds {
        harmonic: harmonic.to_string(),
        harmonic_decimal: decimal(&harmonic),
        log: format_sig(log, 12),
        stahl: format_sig(stahl_bound(g), 12),
        ordering: order,
    })
}

#[derive(Serialize)]
struct SampleJson {
    vertices: usize,
    edges: usize,
    estimate: multistar::EstimateReport,
    bounds: Option<UpperBounds>,
    bounds_note: Option<String>,
}

pub fn sample(config: &RunConfig, input: &Path, samples: u64, seed: u64) -> Result<String> {
    let g = read_graph(input)?;
    let report = monte_carlo_faces(&g, samples, seed)?;
    let (bounds, note) = match upper_bounds(&g, None) {
        Ok(b) => (Some(b), None),
        Err(e @ (Error::Disconnected { .. } | Error::Precondition(_))) => {
            (None, Some(e.to_string()))
        }
        Err(e) => return Err(e),
    };
    Ok(match config.format {
        Format::Json => json_out(
            config,
            SampleJson {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                estimate: report,
                bounds,
                bounds_note: note,
            },
        ),
        Format::Csv => {
            let mut out = String::from("samples,seed,mean,mean_decimal,variance,standard_error,min_faces,max_faces,harmonic_bound,log_bound,stahl_bound\n");
            let (h, l, s) = match &bounds {
                Some(b) => (b.harmonic.clone(), b.log.clone(), b.stahl.clone()),
                None => (String::new(), String::new(), String::new()),
            };
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{h},{l},{s}",
                report.samples,
                report.seed,
                report.mean,
                report.mean_decimal,
                report.variance,
                format_sig(report.standard_error, 12),
                report.min_faces,
                report.max_faces
            )
            .unwrap();
            out
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(
                out,
                "graph           {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            )
            .unwrap();
            writeln!(
                out,
                "samples         {} (seed {})",
                report.samples, report.seed
            )
            .unwrap();
            writeln!(
                out,
                "mean faces      {}",
                fraction_and_decimal(&report.mean)
            )
            .unwrap();
            writeln!(out, "variance        {}", decimal(&report.variance)).unwrap();
            writeln!(
                out,
                "standard error  {}",
                format_sig(report.standard_error, 12)
            )
            .unwrap();
            writeln!(
                out,
                "range           {}..{}",
                report.min_faces, report.max_faces
            )
            .unwrap();
            match (&bounds, &note) {
                (Some(b), _) => {
                    writeln!(
                        out,
                        "harmonic bound  {} ({})",
                        b.harmonic, b.harmonic_decimal
                    )
                    .unwrap();
                    writeln!(out, "log bound       {}", b.log).unwrap();
                    writeln!(out, "stahl bound     {}", b.stahl).unwrap();
                }
                (None, Some(n)) => writeln!(out, "bounds          not applicable: {n}").unwrap(),
                (None, None) => {}
            }
            out
        }
    })
}

pub fn brute(config: &RunConfig, input: &Path, budget: u64) -> Result<String> {
    let g = read_graph(input)?;
    let dist = brute_force_distribution(&g, budget)?;
    Ok(match config.format {
        Format::Json => json_out(config, distribution_json(&dist)),
        Format::Csv => dist.to_csv(),
        Format::Table => {
            let mut out = String::new();
            writeln!(
                out,
                "graph         {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            )
            .unwrap();
            writeln!(out, "embeddings    {}", dist.total()).unwrap();
            out.push('\n');
            out.push_str(&distribution_table(&dist));
            out.push('\n');
            writeln!(
                out,
                "E[F]          {}",
                fraction_and_decimal(&dist.expectation())
            )
            .unwrap();
            out
        }
    })
}

#[derive(Serialize)]
struct BoundsJson {
    upper: UpperBounds,
    lower: Option<CycleFamilyBound>,
}

pub fn bounds(
    config: &RunConfig,
    input: &Path,
    order_file: Option<&Path>,
    cycles_file: Option<&Path>,
) -> Result<String> {
    let g = read_graph(input)?;
    let order = match order_file {
        Some(p) => Some(parse_order_file(&g, &read_file(p)?)?),
        None => None,
    };
    let upper = upper_bounds(&g, order)?;
    let lower = match cycles_file {
        Some(p) => {
            let cycles = parse_cycles_file(&g, &read_file(p)?)?;
            Some(cycle_family_lower_bound(&g, &cycles)?)
        }
        None => None,
    };
    Ok(match config.format {
        Format::Json => json_out(config, BoundsJson { upper, lower }),
        Format::Csv => {
            let mut out = String::from("quantity,exact,decimal\n");
            writeln!(
                out,
                "harmonic_upper,{},{}",
                upper.harmonic, upper.harmonic_decimal
            )
            .unwrap();
            writeln!(out, "log_upper,,{}", upper.log).unwrap();
            writeln!(out, "stahl_upper,,{}", upper.stahl).unwrap();
            if let Some(l) = &lower {
                writeln!(out, "cycle_lower,{},{}", l.exact, decimal(&l.exact)).unwrap();
                writeln!(
                    out,
                    "cycle_lower_coarse,{},{}",
                    l.coarse,
                    decimal(&l.coarse)
                )
                .unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(
                out,
                "graph           {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            )
            .unwrap();
            writeln!(out, "ordering        {}", upper.ordering.labels.join(" ")).unwrap();
            let bd: Vec<String> = upper
                .ordering
                .back_degrees
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(out, "back-degrees    {}", bd.join(" ")).unwrap();
            writeln!(
                out,
                "harmonic bound  {} ({})",
                upper.harmonic, upper.harmonic_decimal
            )
            .unwrap();
            writeln!(out, "log bound       {}", upper.log).unwrap();
            writeln!(out, "stahl bound     {}", upper.stahl).unwrap();
            if let Some(l) = &lower {
                writeln!(
                    out,
                    "cycle lower     {} ({}) from {} cycles",
                    l.exact,
                    decimal(&l.exact),
                    l.cycles
                )
                .unwrap();
                writeln!(out, "coarse lower    {} ({})", l.coarse, decimal(&l.coarse)).unwrap();
            }
            out
        }
    })
}

fn interval_limit(max_n: usize) -> Result<()> {
    if max_n > INTERVAL_SCAN_LIMIT {
        let partitions = partition_counts(max_n).into_iter().skip(2).sum();
        return Err(Error::ScanLimit {
            requested: max_n,
            limit: INTERVAL_SCAN_LIMIT,
            work: partitions,
            unit: "partitions",
        });
    }
    Ok(())
}

pub fn scan_interval(config: &RunConfig, max_n: usize) -> Result<String> {
    interval_limit(max_n)?;
    let rows = interval_scan(max_n)?;
    Ok(match config.format {
        Format::Json => json_out(config, &rows),
        Format::Csv | Format::Table => {
            let mut out = String::from(
                "partition,n,reduced_n,expectation,delta,gap,gap_decimal,half_width,inside\n",
            );
            for r in &rows {
                writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{},{},{}",
                    r.partition,
                    r.n,
                    r.reduced_n,
                    r.expectation,
                    r.delta,
                    r.gap,
                    decimal(&r.gap),
                    r.half_width,
                    r.inside
                )
                .unwrap();
            }
            out
        }
    })
}

#[derive(Serialize)]
struct ConjectureRow {
    vertices: usize,
    mu: usize,
    edges: usize,
    mean: String,
    standard_error: String,
    per_vertex: String,
    per_vertex_log_2mu: String,
}

/// Multiplicities of the doubled edges in the dipole-chain family.
const CHAIN_MULTIPLICITIES: [usize; 4] = [2, 3, 4, 8];

pub fn scan_conjecture(
    config: &RunConfig,
    max_n: usize,
    samples: u64,
    seed: u64,
) -> Result<String> {
    if max_n > CONJECTURE_SCAN_LIMIT {
        return Err(Error::ScanLimit {
            requested: max_n,
            limit: CONJECTURE_SCAN_LIMIT,
            work: ((max_n - 1) * CHAIN_MULTIPLICITIES.len()).into(),
            unit: "sampled graphs",
        });
    }
    let mut rows = Vec::new();
    for (row, (n, mu)) in (2..=max_n)
        .flat_map(|n| CHAIN_MULTIPLICITIES.iter().map(move |&mu| (n, mu)))
        .enumerate()
    {
        let g = dipole_chain(n, mu)?;
        let report = monte_carlo_faces(&g, samples, shard_seed(seed, row as u64))?;
        let mean = report.mean_f64();
        rows.push(ConjectureRow {
            vertices: n,
            mu,
            edges: g.edge_count(),
            mean: format_sig(mean, 12),
            standard_error: format_sig(report.standard_error, 12),
            per_vertex: format_sig(mean / n as f64, 12),
            per_vertex_log_2mu: format_sig(mean / (n as f64 * (2.0 * mu as f64).ln()), 12),
        });
    }
    Ok(match config.format {
        Format::Json => json_out(config, &rows),
        Format::Csv | Format::Table => {
            let mut out = String::from(
                "vertices,mu,edges,mean,standard_error,per_vertex,per_vertex_log_2mu\n",
            );
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.vertices,
                    r.mu,
                    r.edges,
                    r.mean,
                    r.standard_error,
                    r.per_vertex,
                    r.per_vertex_log_2mu
                )
                .unwrap();
            }
            out
        }
    })
}
