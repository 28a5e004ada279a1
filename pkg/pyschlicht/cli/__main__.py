"""``python -m pyschlicht.cli`` 入口。"""

from .main import main

if __name__ == "__main__":
    main()
