#![no_main]

use cliffan::cli::report::Report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = Report::from_json(text) {
        let _ = r.to_text();
        let _ = r.to_csv();
    }
});
