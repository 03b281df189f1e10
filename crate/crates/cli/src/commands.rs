use std::fs;
use std::io::Write;
use std::path::Path;

use kratzer_core::aim::{aim_solve, comparison_table, AimOptions};
use kratzer_core::constants::{energy_to_wavenumber, joule_to_ev};
use kratzer_core::molecule::bundled;
use kratzer_core::oracle::verify;
use kratzer_core::spectro::{
    band_report_json, compare_experiment, fundamental_band, BandReport, Comparison,
    ExperimentalData,
};
use kratzer_core::{
    compute_gamma, compute_kappa, emit_table, energy_level, Format, MoleculeFile, MoleculeParams,
    QuantumState, Table,
};

use crate::args::{
    AimArgs, Command, CompareArgs, ExperimentArgs, LevelsArgs, MoleculeArgs, SpectrumArgs,
    VerifyArgs,
};
use crate::CliError;

pub fn execute(
    command: &Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    match command {
        Command::Levels(a) => levels(a, stdout),
        Command::Spectrum(a) => spectrum(a, stdout),
        Command::Aim(a) => aim(a, stdout),
        Command::Verify(a) => verify_cmd(a, stdout, stderr),
        Command::Compare(a) => compare(a, stdout),
    }
}

fn load_molecule(path: &Path) -> Result<MoleculeFile, CliError> {
    if path.is_file() {
        return Ok(MoleculeFile::load(path)?);
    }
    path.to_str()
        .and_then(bundled::by_name)
        .ok_or_else(|| CliError::Usage(format!("unknown molecule file: {}", path.display())))
}

fn molecule_params(args: &MoleculeArgs) -> Result<MoleculeParams, CliError> {
    let file = load_molecule(&args.molecule)?;
    let mut params = file.to_params()?;
    if let Some(eta) = args.eta {
        params = params.with_eta(eta.into());
    }
    Ok(params)
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            context: format!("writing {}", path.display()),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                context: "writing to stdout".into(),
                source,
            }),
    }
}

fn levels(a: &LevelsArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut params = molecule_params(&a.molecule)?;
    if let Some(dim) = a.dimension {
        params = params.with_dimension(dim)?;
    }
    let dim = params.dimension();
    let mut table = Table::new(["n", "l", "N", "energy_eV", "energy_cm1"]);
    for n in 0..=a.v_max {
        for l in 0..=a.j_max {
            let e = energy_level(&QuantumState::new(n, l, dim)?, &params)?;
            table.push(vec![
                n.into(),
                l.into(),
                dim.into(),
                joule_to_ev(e).into(),
                energy_to_wavenumber(e).into(),
            ]);
        }
    }
    emit(
        &emit_table(&table, a.output.format.into()),
        a.output.output.as_deref(),
        stdout,
    )
}

fn experimental_center(args: &ExperimentArgs, molecule: &str) -> Result<Option<f64>, CliError> {
    if let Some(v) = args.experimental {
        return Ok(Some(v));
    }
    let data = match &args.experimental_file {
        Some(path) => ExperimentalData::load(path)?,
        None => ExperimentalData::bundled(),
    };
    Ok(data.center(molecule))
}

fn band_and_comparison(
    molecule: &MoleculeArgs,
    experiment: &ExperimentArgs,
    j_max: u32,
) -> Result<(BandReport, Option<Comparison>), CliError> {
    let params = molecule_params(molecule)?.with_dimension(3)?;
    let band = fundamental_band(&params, j_max)?;
    let comparison = experimental_center(experiment, params.name())?
        .map(|c| compare_experiment(&band, c))
        .transpose()?;
    Ok((band, comparison))
}

fn spectrum(a: &SpectrumArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (band, comparison) = band_and_comparison(&a.molecule, &a.experiment, a.j_max)?;
    let lines = band.line_table();
    if let Some(path) = &a.lines {
        emit(&emit_table(&lines, Format::Csv), Some(path), stdout)?;
    }
    let text = match Format::from(a.format) {
        Format::Json => band_report_json(&band, comparison.as_ref()),
        other => emit_table(&lines, other),
    };
    emit(&text, a.output.as_deref(), stdout)
}

fn compare(a: &CompareArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (band, comparison) = band_and_comparison(&a.molecule, &a.experiment, 1)?;
    let comparison = comparison.ok_or_else(|| {
        CliError::Usage(format!(
            "no experimental band centre for {}; pass --experimental",
            band.molecule
        ))
    })?;
    let text = match Format::from(a.format) {
        Format::Json => band_report_json(&band, Some(&comparison)),
        other => {
            let mut t = Table::new([
                "molecule",
                "center_theory",
                "center_experiment",
                "ratio",
                "abs_deviation",
                "rel_deviation",
                "more_than_twice",
            ]);
            t.push(vec![
                comparison.molecule.clone().into(),
                comparison.theoretical.into(),
                comparison.experimental.into(),
                comparison.ratio.into(),
                comparison.abs_deviation.into(),
                comparison.rel_deviation.into(),
                comparison.more_than_twice.into(),
            ]);
            emit_table(&t, other)
        }
    };
    emit(&text, a.output.as_deref(), stdout)
}

fn aim(a: &AimArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (kappa, dim) = match (&a.molecule, a.kappa) {
        (Some(path), _) => {
            let mut params = load_molecule(path)?.to_params()?;
            if let Some(dim) = a.dimension {
                params = params.with_dimension(dim)?;
            }
            (compute_kappa(&params), params.dimension())
        }
        (None, Some(kappa)) => {
            if !(kappa > 0.0 && kappa.is_finite()) {
                return Err(kratzer_core::Error::Domain(format!(
                    "kappa must be positive and finite, got {kappa}"
                ))
                .into());
            }
            (kappa, a.dimension.unwrap_or(3))
        }
        (None, None) => return Err(CliError::Usage("pass --molecule or --kappa".into())),
    };
    QuantumState::new(0, a.l, dim)?;
    let gamma = compute_gamma(kappa, a.l, dim);
    let options = AimOptions {
        y0: a.y0,
        k_max: a.k_max,
        scan_points: a.scan_points,
        ..AimOptions::default()
    };
    let result = aim_solve(kappa, gamma, dim, a.n_max, &options)?;
    let table = comparison_table(&result, kappa, gamma, dim)?;
    emit(
        &emit_table(&table, a.output.format.into()),
        a.output.output.as_deref(),
        stdout,
    )
}

fn verify_cmd(
    a: &VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    if !(a.tolerance > 0.0) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {}",
            a.tolerance
        )));
    }
    let params = molecule_params(&a.molecule)?;
    let dims = if a.dimension.is_empty() {
        vec![params.dimension()]
    } else {
        a.dimension.clone()
    };
    let rows = verify(&params, &dims, a.n_max, a.l_max, a.points)?;
    let mut table = Table::new([
        "N",
        "n",
        "l",
        "E_closed",
        "E_oracle",
        "rel_err",
        "grid_points",
    ]);
    for r in &rows {
        table.push(vec![
            r.dimension.into(),
            r.n.into(),
            r.l.into(),
            joule_to_ev(r.e_closed).into(),
            joule_to_ev(r.e_oracle).into(),
            r.rel_err.into(),
            r.grid_points.into(),
        ]);
    }
    emit(
        &emit_table(&table, a.output.format.into()),
        a.output.output.as_deref(),
        stdout,
    )?;
    let breaches: Vec<_> = rows
        .iter()
        .filter(|r| !(r.rel_err <= a.tolerance))
        .collect();
    if breaches.is_empty() {
        return Ok(());
    }
    for r in &breaches {
        let _ = writeln!(
            stderr,
            "N={} n={} l={}: relative error {:e} exceeds {:e}",
            r.dimension, r.n, r.l, r.rel_err, a.tolerance
        );
    }
    Err(CliError::ToleranceBreach(format!(
        "{} of {} states exceed the tolerance",
        breaches.len(),
        rows.len()
    )))
}
