//! The full computation from a monomial ideal to its Segre class.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::calculus::{
    cell_integral, closed_form, excess, sum_cells, to_series, ClassExpr, ClassTerm, ClosedForm, Excess, HSeries,
    TruncatedSeries,
};
use crate::decompose::{decompose_fan, decompose_staircase, Cell, CellSet, Engine};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdealSpec};
use crate::polyhedron::{build_polyhedron, NewtonPolyhedron};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreOptions {
    pub engine: Engine,
    /// Series truncation degree. Defaults to the ambient dimension when
    /// specializing and to `n` otherwise.
    pub truncation: Option<u32>,
    /// Degrees `d_i` of the hypersurfaces `X_i`, for the substitution
    /// `X_i = d_i·H`. Setting this or `ambient_dim` turns specialization on;
    /// the default is all ones.
    pub degrees: Option<Vec<BigInt>>,
    /// `N` for `P^N`; defaults to `n` when specializing.
    pub ambient_dim: Option<usize>,
    /// Degrees of `N` hypersurfaces whose intersection is compared with the
    /// Bézout number.
    pub excess_degrees: Option<Vec<BigInt>>,
    /// Worker threads for per-cell evaluation; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SegreOptions {
    fn default() -> Self {
        Self {
            engine: Engine::Fan,
            truncation: None,
            degrees: None,
            ambient_dim: None,
            excess_degrees: None,
            jobs: None,
        }
    }
}

impl SegreOptions {
    fn specializes(&self) -> bool {
        self.degrees.is_some() || self.ambient_dim.is_some() || self.excess_degrees.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct SegreOutput {
    pub spec: MonomialIdealSpec,
    /// Generators that are vertices of the Newton polyhedron.
    pub minimal: MonomialIdealSpec,
    pub engine: Engine,
    pub polyhedron: Option<NewtonPolyhedron>,
    pub cells: CellSet,
    /// The integral of each nondegenerate cell, in cell order.
    pub cell_breakdown: Vec<(Cell, ClassTerm)>,
    pub class: ClassExpr,
    pub series: TruncatedSeries,
    pub closed_form: ClosedForm,
    pub degrees: Option<Vec<BigInt>>,
    pub specialized: Option<HSeries>,
    pub specialized_class: Option<ClassExpr>,
    pub specialized_closed_form: Option<ClosedForm>,
    pub excess: Option<Excess>,
    /// The integral formula is proven only for two variables.
    pub conjectural: bool,
}

impl SegreOutput {
    /// The per-cell terms after `X_i = d_i·H`.
    pub fn specialized_cell_terms(&self) -> Option<Vec<ClassTerm>> {
        let d = self.degrees.as_ref()?;
        let d: Vec<Rational> = d.iter().cloned().map(Rational::from_integer).collect();
        Some(self.cell_breakdown.iter().map(|(_, t)| t.specialize(&d)).collect())
    }
}

fn decompose(spec: &MonomialIdealSpec, engine: Engine, poly: Option<&NewtonPolyhedron>) -> Result<CellSet> {
    if spec.is_unit() {
        return CellSet::new(spec.n(), Vec::new());
    }
    match engine {
        Engine::Fan => Ok(decompose_fan(poly.expect("polyhedron of a non-unit ideal"))),
        Engine::Staircase => decompose_staircase(spec),
    }
}

fn check_positive(degrees: &[BigInt], what: &str) -> Result<()> {
    if degrees.iter().any(|d| d <= &BigInt::zero()) {
        return Err(Error::InvalidSpec(format!("{what} must be positive")));
    }
    Ok(())
}

/// Minimalize, decompose, integrate, expand and specialize.
pub fn compute_segre(spec: &MonomialIdealSpec, opts: &SegreOptions) -> Result<SegreOutput> {
    match opts.jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(|| run(spec, opts)),
        _ => run(spec, opts),
    }
}

fn run(spec: &MonomialIdealSpec, opts: &SegreOptions) -> Result<SegreOutput> {
    let n = spec.n();
    if opts.engine == Engine::Staircase && n != 2 {
        return Err(Error::StaircaseDimension(n));
    }
    let minimal = minimalize(spec);
    let polyhedron = (!minimal.is_unit()).then(|| build_polyhedron(&minimal));
    let cells = decompose(&minimal, opts.engine, polyhedron.as_ref())?;
    let class = sum_cells(&cells)?;
    let cell_breakdown = cells
        .effective()
        .map(|c| Ok((c.clone(), cell_integral(c)?)))
        .collect::<Result<Vec<_>>>()?;

    let specializing = opts.specializes();
    let ambient = match (&opts.ambient_dim, &opts.excess_degrees) {
        (Some(a), _) => *a,
        (None, Some(e)) => e.len(),
        (None, None) => n,
    };
    let truncation = opts
        .truncation
        .unwrap_or(if specializing { ambient as u32 } else { n as u32 });
    let series = to_series(&class, truncation);
    let closed = closed_form(&class);

    let mut degrees = None;
    let mut specialized = None;
    let mut specialized_class = None;
    let mut specialized_closed_form = None;
    let mut excess_out = None;
    if specializing {
        let d = opts.degrees.clone().unwrap_or_else(|| vec![BigInt::from(1); n]);
        if d.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} variable degrees for {n} variables",
                d.len()
            )));
        }
        check_positive(&d, "variable degrees")?;
        let dq: Vec<Rational> = d.iter().cloned().map(Rational::from_integer).collect();
        let sc = class.specialize(&dq)?;
        let hs = HSeries::from_poly(to_series(&sc, ambient as u32).poly(), ambient)?;
        if let Some(e) = &opts.excess_degrees {
            check_positive(e, "hypersurface degrees")?;
            excess_out = Some(excess(&hs, e)?);
        }
        specialized_closed_form = Some(closed_form(&sc));
        specialized = Some(hs);
        specialized_class = Some(sc);
        degrees = Some(d);
    }

    Ok(SegreOutput {
        spec: spec.clone(),
        minimal,
        engine: opts.engine,
        polyhedron,
        cells,
        cell_breakdown,
        class,
        series,
        closed_form: closed,
        degrees,
        specialized,
        specialized_class,
        specialized_closed_form,
        excess: excess_out,
        conjectural: n > 2,
    })
}
