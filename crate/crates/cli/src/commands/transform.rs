use std::io::Write;

use hforge::io::{read_signal, write_complex_spectrum, write_spectrum, SignalFileError};
use hforge::{
    dft_naive, dht_naive, fourier_from_hartley, fwht, ifwht, idht_naive, FhtPlan, TransformError,
};

use crate::cli::{TransformArgs, TransformKind};
use crate::Exit;

enum Output {
    Real(Vec<f64>),
    Complex(Vec<hforge::Complex<f64>>),
}

pub fn run(args: &TransformArgs, diag: &mut dyn Write) -> Exit {
    let signal = match read_signal(&args.input, args.in_format) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(diag, "error: reading {}: {e}", args.input.display());
            return Exit::Usage;
        }
    };
    let n = signal.len();
    let fast_ok = n.is_power_of_two();
    let hadamard = matches!(args.kind, TransformKind::Fwht | TransformKind::Ifwht);

    if !fast_ok && args.kind != TransformKind::DhtNaive {
        if hadamard {
            let _ = writeln!(diag, "error: no Hadamard matrix of order {n}; length must be a power of two");
            return Exit::Usage;
        }
        if args.strict {
            let _ = writeln!(diag, "error: length {n} is not a power of two (--strict)");
            return Exit::Usage;
        }
        let _ = writeln!(
            diag,
            "warning: length {n} is not a power of two; using the O(N^2) direct transform"
        );
    }

    let result = transform(args, &signal, fast_ok);
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(diag, "internal error: {e}");
            return Exit::Internal;
        }
    };
    let written = match &output {
        Output::Real(v) => write_spectrum(&args.output, args.format, v),
        Output::Complex(v) => write_complex_spectrum(&args.output, args.format, v),
    };
    match written {
        Ok(()) => Exit::Ok,
        Err(e @ SignalFileError::UnknownFormat(_)) => {
            let _ = writeln!(diag, "error: {e}");
            Exit::Usage
        }
        Err(e) => {
            let _ = writeln!(diag, "error: writing {}: {e}", args.output.display());
            Exit::Usage
        }
    }
}

fn forward_hartley(args: &TransformArgs, v: &[f64]) -> Result<Vec<f64>, TransformError> {
    if args.plan_reuse {
        Ok(FhtPlan::new(v.len())?.process(v)?.into_vec())
    } else {
        Ok(hforge::fht(v)?.into_vec())
    }
}

fn transform(args: &TransformArgs, v: &[f64], fast_ok: bool) -> Result<Output, TransformError> {
    let n = v.len() as f64;
    Ok(match args.kind {
        TransformKind::DhtNaive => Output::Real(dht_naive(v)?.into_vec()),
        TransformKind::Fht if fast_ok => Output::Real(forward_hartley(args, v)?),
        TransformKind::Fht => Output::Real(dht_naive(v)?.into_vec()),
        TransformKind::Idht if fast_ok => {
            Output::Real(forward_hartley(args, v)?.into_iter().map(|x| x / n).collect())
        }
        TransformKind::Idht => Output::Real(idht_naive(v)?.into_vec()),
        TransformKind::Dft if fast_ok => {
            Output::Complex(fourier_from_hartley(&forward_hartley(args, v)?)?.into_vec())
        }
        TransformKind::Dft => Output::Complex(dft_naive(v)?.into_vec()),
        TransformKind::Fwht => Output::Real(fwht(v)?.into_vec()),
        TransformKind::Ifwht => Output::Real(ifwht(v)?.into_vec()),
    })
}
