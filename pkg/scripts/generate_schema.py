import json
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from evidence_lib.parser import BpaDocument


def generate_schema(output_dir: Path = project_root / "evidence_spec" / "schemas") -> Path:
    output_dir.mkdir(parents=True, exist_ok=True)

    # BPA document schema
    schema_path = output_dir / "bpa.schema.json"
    with open(schema_path, "w", encoding="utf-8") as f:
        json.dump(BpaDocument.model_json_schema(), f, indent=2)
        f.write("\n")
    print(f"Generated {schema_path}")
    return schema_path


if __name__ == "__main__":
    generate_schema()
