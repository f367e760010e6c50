from fraxion.cli import main

raise SystemExit(main())
