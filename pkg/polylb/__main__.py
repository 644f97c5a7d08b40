import sys
import traceback


def main() -> None:
    try:
        from polylb import polylb_cli

        code = polylb_cli.run_cli()
    except Exception as exc:
        sys.stderr.write("ERROR: polylb failed: %s\n" % exc)
        traceback.print_exc()
        sys.exit(1)
    sys.exit(code)


if __name__ == "__main__":
    main()
