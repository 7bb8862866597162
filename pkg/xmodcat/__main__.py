from xmodcat.cli import main

raise SystemExit(main())
