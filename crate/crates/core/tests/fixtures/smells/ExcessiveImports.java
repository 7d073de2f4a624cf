package com.example.imports;

import java.util.List;
import java.util.Map;
import java.util.Set;
import java.util.HashMap;
import java.util.HashSet;
import java.util.ArrayList;
import java.util.LinkedList;
import java.util.TreeMap;
import java.util.TreeSet;
import java.util.Deque;
import java.util.ArrayDeque;
import java.util.Queue;
import java.util.PriorityQueue;
import java.util.Iterator;
import java.util.Collection;
import java.util.Collections;
import java.util.Arrays;
import java.util.Optional;
import java.util.Objects;
import java.util.Random;
import java.util.UUID;
import java.util.Locale;
import java.io.File;
import java.io.InputStream;
import java.io.OutputStream;
import java.io.Reader;
import java.io.Writer;
import java.io.IOException;
import java.time.Instant;
import java.time.Duration;
import java.time.LocalDate;

public class Imports {
}
