from data.loaders import load_manifest
from tools import generate_synthetic_dataset


def test_writes_a_manifest_with_both_classes(tmp_path, capsys):
    generate_synthetic_dataset.main(
        [
            str(tmp_path),
            "--segments-per-class",
            "4",
            "--subjects-per-class",
            "2",
            "--seed",
            "11",
        ]
    )

    manifest_path = tmp_path / "manifest.csv"
    assert capsys.readouterr().out.strip() == f"Wrote {manifest_path.as_posix()}"
    manifest = load_manifest(manifest_path)
    assert len(manifest.entries) == 4
    assert {entry.subject_id for entry in manifest.entries} == {
        "pos00",
        "pos01",
        "neg00",
        "neg01",
    }
    assert all(entry.path.is_file() for entry in manifest.entries)
